#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace zhl {

// Adaptive Simpson quadrature with absolute/relative tolerance.
// Throws std::runtime_error if the recursion budget is exhausted.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol = 1e-9,
                        int max_depth = 48);

// Convenience: integrate over [a,b] split at the given interior points.
double adaptive_simpson_split(const std::function<double(double)>& f, double a, double b,
                              std::vector<double> splits, double tol = 1e-9, int max_depth = 48);

// Cumulative integral of uniformly sampled data: out[m] = int_{t_ref}^{t_m} f,
// 4th-order (cubic-interpolant) composite rule, exact anchor out[m_ref] = 0.
// Works in both directions from the anchor index.
std::vector<std::complex<double>> cumulative_integral(const std::vector<std::complex<double>>& f, double dt,
                                                      int m_ref);

inline double simpson_uniform(const std::vector<double>& y, double h) {
    // composite Simpson for even sample counts falls back to trapezoid on the tail
    const int n = static_cast<int>(y.size());
    if (n < 2) return 0.0;
    double acc = 0.0;
    int i = 0;
    for (; i + 2 < n; i += 2) acc += (y[i] + 4.0 * y[i + 1] + y[i + 2]) * h / 3.0;
    if (i + 1 < n) acc += 0.5 * h * (y[i] + y[i + 1]);
    return acc;
}

}  // namespace zhl
