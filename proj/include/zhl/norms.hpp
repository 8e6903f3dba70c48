#pragma once

/*
 * norms.hpp — fractional Sobolev and restricted (Bourgain-type) norms,
 * spectral calculus on the periodic box, and rough-data generators.
 *
 * Weights:
 *   H^s          <xi>^s
 *   X^{s,b}      <xi>^s <tau + xi^2>^b      (Schrodinger characteristic)
 *   Y^{s,b}_+-   <xi>^s <tau -+ xi>^b      (wave characteristics)
 *   Z^{s}        <xi>^s <tau + xi^2>^{-1}, L^1 in tau then l^2 in xi
 *
 * The Y^{s,b} infimum over splittings n = n_+ + n_- is replaced by its
 * per-mode quadratic relaxation, which has the closed form
 *   |nhat|^2 (w_+ w_-)^2 / (w_+^2 + w_-^2)
 * per mode and lies within a factor sqrt(2) below the infimum of the sum.
 */

#include <cstdint>

#include "zhl/grid.hpp"

namespace zhl {

// --- line norms -------------------------------------------------------------

double sobolev_norm(const LineFunction& f, double s);

// || d_x^{-1} f ||_{H^{s+1}}; requires numerically mean-zero input.
double hat_sobolev_norm(const LineFunction& f, double s, double mean_tol = 1e-8);

struct Antiderivative {
    LineFunction primitive;  // mean-zero primitive
    cplx removed_mean;       // mean of the input that was projected out
};
Antiderivative antiderivative(const LineFunction& f);

// primitive anchored to vanish at the left box edge (decay normalization);
// this is the canonical primitive of a function whose integral vanishes.
LineFunction anchored_primitive(const LineFunction& f);

LineFunction spectral_derivative(const LineFunction& f);
cplx mean_value(const LineFunction& f);

// --- space-time norms -------------------------------------------------------

double xsb_norm(const SpaceTimeField& w, double s, double b);
double ysb_pm_norm(const SpaceTimeField& w, double s, double b, int sign);
double ysb_norm(const SpaceTimeField& w, double s, double b);
double z_norm(const SpaceTimeField& w, double s0);

// weighted-l2 cores operating on 2-D spectral data (field_to_freq layout);
// these skip the physical-field audits and are what the single-mode
// convention tests pin down.
double xsb_norm_freq(const GridSpec& g, const std::vector<cplx>& uhat, double s, double b);
double ysb_pm_norm_freq(const GridSpec& g, const std::vector<cplx>& uhat, double s, double b, int sign);
double ysb_norm_freq(const GridSpec& g, const std::vector<cplx>& uhat, double s, double b);
double z_norm_freq(const GridSpec& g, const std::vector<cplx>& uhat, double s0);

// temporal Sobolev norm of a trace (whole-line transform in t)
double trace_sobolev_norm(const TimeTrace& h, double s);

// --- random rough data ------------------------------------------------------

// Deterministic counter-based uniform in [0,1): same (seed, k) always gives
// the same value, independent of grid size, so refined grids extend the same
// random function.
double hash_u01(std::uint64_t seed, std::int64_t k0, std::int64_t k1 = 0);

// |fhat(xi)| = <xi>^{-s-1/2-slack} with uniform random phases, windowed to
// satisfy the decay audit and normalized so sobolev_norm(., s) = amplitude.
// band <= 0 means the full grid bandwidth.  Phases are keyed on the signed
// frequency index, so refining N extends the same underlying function.
LineFunction random_sobolev_sample(const GridSpec& g, double s, std::uint64_t seed, double amplitude,
                                   double slack = 0.05, double band = 0.0);
// real-valued variant (Hermitian coefficients), for wave data
LineFunction random_sobolev_sample_real(const GridSpec& g, double s, std::uint64_t seed, double amplitude,
                                        double slack = 0.05, double band = 0.0);

// space-time field with |what| ~ <xi>^{-s-1/2-slack} <tau + xi^2>^{-b-1/2-slack}
// (Schrodinger profile), normalized so xsb_norm(., s, b) = amplitude.
SpaceTimeField random_xsb_sample(const GridSpec& g, double s, double b, std::uint64_t seed, double amplitude,
                                 double slack = 0.05, double band_x = 0.0, double band_t = 0.0);
// wave profile with weight <tau -+ xi>; sign = +1/-1 picks the characteristic,
// sign = 0 mixes both halves; real_valued = Hermitian-symmetric field.
// Normalized so ysb_norm(., s, b) = amplitude.
SpaceTimeField random_ysb_sample(const GridSpec& g, double s, double b, int sign, bool real_valued,
                                 std::uint64_t seed, double amplitude, double slack = 0.05, double band_x = 0.0,
                                 double band_t = 0.0);

// --- field helpers ----------------------------------------------------------

SpaceTimeField multiply_fields(const SpaceTimeField& a, const SpaceTimeField& b);  // pointwise, dealiased
SpaceTimeField multiply_pointwise(const SpaceTimeField& a, const SpaceTimeField& b);
SpaceTimeField scale_field(const SpaceTimeField& a, cplx c);
SpaceTimeField add_fields(const SpaceTimeField& a, const SpaceTimeField& b, cplx cb = 1.0);
SpaceTimeField apply_eta_window(const SpaceTimeField& a, double t_scale);  // multiply by eta(t/t_scale)
SpaceTimeField field_dx(const SpaceTimeField& a);                          // spectral d/dx slice-wise
LineFunction line_dx(const LineFunction& f);

// inject a function onto a finer grid of the same physical box (spectral zero-pad)
LineFunction inject(const LineFunction& f, const GridSpec& fine);
SpaceTimeField inject(const SpaceTimeField& u, const GridSpec& fine);
TimeTrace inject(const TimeTrace& c, const GridSpec& fine);

}  // namespace zhl
