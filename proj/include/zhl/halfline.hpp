#pragma once

/*
 * halfline.hpp — half-line data handling: admissible exponent pairs,
 * smoothing-gain suprema, extension operators and the psi_+- combination
 * feeding the wave propagator.
 *
 * Admissibility of (s0, s1):
 *   s0 in (0, 5/2) \ {1/2, 3/2},  s1 in (-1/2, 3/2) \ {1/2},
 *   0 < s0 - s1 <= 1,  2 s0 > s1 + 1/2 > 0.
 *
 * Smoothing gains (noncritical, s0 < s1 + 1):
 *   a0 < min(1/2, s1 + 1/2, s1 - s0 + 1, 5/2 - s0)
 *   a1 < min(s0 - s1, 2 s0 - s1 - 1/2, 3/2 - s1)
 * Critical line s0 = s1 + 1: no gain on the Schrodinger side,
 *   a1 < min(1, 3/2 - s1).
 */

#include <string>
#include <vector>

#include "zhl/norms.hpp"

namespace zhl {

struct RegularityPair {
    double s0 = 0;
    double s1 = 0;
    bool admissible = false;
    bool critical = false;        // s0 = s1 + 1
    double a0_sup = 0;            // 0 on the critical line: no gain claimed
    double a1_sup = 0;
    std::vector<std::string> violations;
};

RegularityPair admissible(double s0, double s1);

// suprema of the smoothing gains; throws std::domain_error on a
// non-admissible pair
std::pair<double, double> smoothing_exponents(const RegularityPair& pair);

struct HalfLineFunction {
    GridSpec grid;
    std::vector<cplx> v;  // samples at x >= 0, i.e. grid indices N/2 .. N-1

    HalfLineFunction() = default;
    explicit HalfLineFunction(const GridSpec& g) : grid(g), v(g.N / 2, cplx(0, 0)) {}

    cplx boundary_value() const { return v.empty() ? cplx(0, 0) : v[0]; }
    double x(int i) const { return grid.x(grid.index_x0() + i); }
    int size() const { return static_cast<int>(v.size()); }
};

HalfLineFunction restrict_half(const LineFunction& f);

struct ZeroExtension {
    LineFunction extension;
    double norm_ratio;  // whole-line norm / half-line norm proxy
};
// valid for -1/2 < s < 1/2, or 1/2 < s < 3/2 with vanishing trace
ZeroExtension zero_extension(const HalfLineFunction& g, double s, double trace_tol = 1e-8);

// higher-order reflection extension: 4-point reflection weights matching
// derivatives up to order 3 at x = 0, tapered by a smooth cutoff on x < 0.
// Restriction to x >= 0 reproduces the input bit-exactly.
LineFunction smooth_extension(const HalfLineFunction& g);

struct PsiPair {
    LineFunction psi_plus;
    LineFunction psi_minus;
};
// psi_+- = n0e +- d_x^{-1} n1e; n1e must be numerically mean-zero
PsiPair psi_pm(const LineFunction& n0e, const LineFunction& n1e, double mean_tol = 1e-8);

struct CompatibilityReport {
    bool u_required = false;   // s0 > 1/2
    bool n_required = false;   // s1 > 1/2
    bool u_ok = true;          // h(0) = g(0) when required
    bool n_ok = true;          // f(0) = n0(0) when required
    double u_mismatch = 0;
    double n_mismatch = 0;
    bool pass() const { return u_ok && n_ok; }
};
CompatibilityReport compatibility_check(const HalfLineFunction& g, const TimeTrace& h, double s0,
                                        const HalfLineFunction& n0, const TimeTrace& f, double s1,
                                        double tol = 1e-8);

struct ApproximateExtension {
    LineFunction f_e;        // H^k extension of f close to g_e below regularity s
    double distance_r;       // measured || g_e - f_e ||_{H^r}
};
// Construction: take the smooth extension of f, zero-extend the mismatch
// g - f, truncate the residual to x < -delta and mollify with a 4th-order
// kernel supported in (-delta, delta).  Valid for -1/2 < s < 1/2.
ApproximateExtension approximate_extension(const HalfLineFunction& g, double s, const HalfLineFunction& f,
                                           const LineFunction& g_e, double r, double delta = 0.0);

}  // namespace zhl
