#include "zhl/quadrature.hpp"

#include <algorithm>

namespace zhl {

namespace {

double simpson_rule(double fa, double fm, double fb, double h) { return (fa + 4.0 * fm + fb) * h / 6.0; }

double adapt(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
             double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson_rule(fa, flm, fm, m - a);
    const double right = simpson_rule(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (depth <= 0) throw std::runtime_error("adaptive_simpson: subdivision budget exhausted");
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol, int max_depth) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = simpson_rule(fa, fm, fb, b - a);
    return adapt(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

double adaptive_simpson_split(const std::function<double(double)>& f, double a, double b,
                              std::vector<double> splits, double tol, int max_depth) {
    splits.push_back(a);
    splits.push_back(b);
    std::sort(splits.begin(), splits.end());
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < splits.size(); ++i) {
        const double lo = std::clamp(splits[i], a, b);
        const double hi = std::clamp(splits[i + 1], a, b);
        if (hi > lo) acc += adaptive_simpson(f, lo, hi, tol, max_depth);
    }
    return acc;
}

std::vector<std::complex<double>> cumulative_integral(const std::vector<std::complex<double>>& f, double dt,
                                                      int m_ref) {
    using cd = std::complex<double>;
    const int n = static_cast<int>(f.size());
    if (n < 4) throw std::invalid_argument("cumulative_integral: need at least 4 samples");
    if (m_ref < 0 || m_ref >= n) throw std::invalid_argument("cumulative_integral: anchor out of range");

    // per-interval integrals, cubic interpolant through 4 neighbouring nodes
    std::vector<cd> seg(n - 1);
    for (int m = 0; m + 1 < n; ++m) {
        if (m == 0)
            seg[m] = dt / 24.0 * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]);
        else if (m + 2 >= n)
            seg[m] = dt / 24.0 * (f[n - 4] - 5.0 * f[n - 3] + 19.0 * f[n - 2] + 9.0 * f[n - 1]);
        else
            seg[m] = dt / 24.0 * (-f[m - 1] + 13.0 * f[m] + 13.0 * f[m + 1] - f[m + 2]);
    }

    std::vector<cd> out(n, cd(0, 0));
    for (int m = m_ref + 1; m < n; ++m) out[m] = out[m - 1] + seg[m - 1];
    for (int m = m_ref - 1; m >= 0; --m) out[m] = out[m + 1] - seg[m];
    return out;
}

}  // namespace zhl
