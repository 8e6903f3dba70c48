#pragma once

/*
 * grid.hpp — discretization substrate.
 *
 * The real line is modeled by the periodic box [-L, L) with N samples and
 * the time axis by [t0, t0 + T_box) with M samples.  All spectral
 * conventions are fixed here and asserted by single-mode tests:
 *
 *   x_j  = -L + j*dx,          dx = 2L/N
 *   t_m  = t0 + m*dt,          dt = T_box/M          (t = 0 lies on the grid)
 *   xi_k = (pi/L)*k,           k = -N/2 .. N/2-1,    dxi  = pi/L
 *   tau_r = (2*pi/T_box)*r,    r = -M/2 .. M/2-1,    dtau = 2*pi/T_box
 *
 * Transforms are normalized so that the discrete Parseval identity is exact:
 *
 *   fhat(xi_k)        = dx/sqrt(2*pi) * sum_j f_j exp(-i xi_k x_j)
 *   uhat(xi_k, tau_r) = dx*dt/(2*pi)  * sum_{j,m} u_jm exp(-i xi_k x_j - i tau_r t_m)
 *
 *   sum_k |fhat_k|^2 dxi            = sum_j |f_j|^2 dx
 *   sum_{k,r} |uhat_kr|^2 dxi dtau  = sum_{j,m} |u_jm|^2 dx dt
 *
 * With this normalization the s = 0 Sobolev norm coincides with the L^2
 * norm of the samples.
 */

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "zhl/fft.hpp"

namespace zhl {

constexpr double kDecayAuditTol = 1e-10;    // spatial decay at |x| >= L/2
constexpr double kTimeAuditTol = 1e-8;      // relative temporal support at box edges

inline double japanese_bracket(double x) { return std::sqrt(1.0 + x * x); }

struct GridSpec {
    double L = 32.0;      // spatial half-width; box is [-L, L)
    int N = 512;          // spatial samples, power of two
    double T_box = 4.0;   // temporal extent
    int M = 1024;         // temporal samples, power of two
    double t0 = -2.0;     // left edge of the time box

    double dx() const { return 2.0 * L / N; }
    double dt() const { return T_box / M; }
    double dxi() const { return M_PI / L; }
    double dtau() const { return 2.0 * M_PI / T_box; }

    double x(int j) const { return -L + j * dx(); }
    double t(int m) const { return t0 + m * dt(); }
    // signed frequency index for FFT bin k
    int kfreq(int k, int n) const { return k < n / 2 ? k : k - n; }
    double xi(int k) const { return dxi() * kfreq(k, N); }
    double tau(int r) const { return dtau() * kfreq(r, M); }

    int index_x0() const { return N / 2; }  // grid index of x = 0
    int index_t0() const {                  // grid index of t = 0
        double m = -t0 / dt();
        int mi = static_cast<int>(std::lround(m));
        if (std::abs(m - mi) > 1e-9) throw std::invalid_argument("GridSpec: t = 0 must lie on the time grid");
        return mi;
    }

    GridSpec() = default;
    GridSpec(double L_, int N_, double Tbox_, int M_, double t0_) : L(L_), N(N_), T_box(Tbox_), M(M_), t0(t0_) {
        validate();
    }
    void validate() const {
        auto pow2 = [](int n) { return n > 0 && (n & (n - 1)) == 0; };
        if (!pow2(N) || !pow2(M)) throw std::invalid_argument("GridSpec: N and M must be powers of two");
        if (!(L > 0) || !(T_box > 0)) throw std::invalid_argument("GridSpec: L and T_box must be positive");
        if (t0 > 0 || t0 + T_box < 0) throw std::invalid_argument("GridSpec: time box must contain t = 0");
        (void)index_t0();
    }
    bool operator==(const GridSpec& o) const {
        return L == o.L && N == o.N && T_box == o.T_box && M == o.M && t0 == o.t0;
    }
    bool operator!=(const GridSpec& o) const { return !(*this == o); }
};

// Refined copies. doubled() doubles both axes; the time box is unchanged.
inline GridSpec doubled(const GridSpec& g) { return GridSpec(g.L, 2 * g.N, g.T_box, 2 * g.M, g.t0); }

struct LineFunction {
    GridSpec grid;
    std::vector<cplx> v;  // N samples over [-L, L)

    LineFunction() = default;
    explicit LineFunction(const GridSpec& g) : grid(g), v(g.N, cplx(0.0, 0.0)) {}

    double sup() const {
        double m = 0;
        for (auto& z : v) m = std::max(m, std::abs(z));
        return m;
    }
    bool finite() const {
        for (auto& z : v)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }
    // decay audit: negligible mass at |x| >= L/2
    bool decays() const {
        double m = sup();
        double edge = 0;
        for (int j = 0; j < grid.N; ++j)
            if (std::abs(grid.x(j)) >= grid.L / 2) edge = std::max(edge, std::abs(v[j]));
        return edge <= kDecayAuditTol * std::max(1.0, m);
    }
};

struct TimeTrace {
    GridSpec grid;
    std::vector<cplx> v;  // M samples over [t0, t0 + T_box)

    TimeTrace() = default;
    explicit TimeTrace(const GridSpec& g) : grid(g), v(g.M, cplx(0.0, 0.0)) {}

    double sup() const {
        double m = 0;
        for (auto& z : v) m = std::max(m, std::abs(z));
        return m;
    }
    // zero out t < 0 (restriction to the forward time half line)
    TimeTrace restricted_positive() const {
        TimeTrace r = *this;
        for (int m = 0; m < grid.M; ++m)
            if (grid.t(m) < 0) r.v[m] = 0.0;
        return r;
    }
};

struct SpaceTimeField {
    GridSpec grid;
    std::vector<cplx> v;  // row-major N x M, index [j*M + m]

    SpaceTimeField() = default;
    explicit SpaceTimeField(const GridSpec& g) : grid(g), v(static_cast<std::size_t>(g.N) * g.M, cplx(0.0, 0.0)) {}

    cplx& at(int j, int m) { return v[static_cast<std::size_t>(j) * grid.M + m]; }
    const cplx& at(int j, int m) const { return v[static_cast<std::size_t>(j) * grid.M + m]; }

    double sup() const {
        double m = 0;
        for (auto& z : v) m = std::max(m, std::abs(z));
        return m;
    }
    bool finite() const {
        for (auto& z : v)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }
    // temporal support audit: relative mass near the time box edges
    bool time_supported() const {
        double m = sup();
        if (m == 0) return true;
        int band = std::max(1, grid.M / 64);
        double edge = 0;
        for (int j = 0; j < grid.N; ++j)
            for (int c = 0; c < band; ++c) {
                edge = std::max(edge, std::abs(at(j, c)));
                edge = std::max(edge, std::abs(at(j, grid.M - 1 - c)));
            }
        return edge <= kTimeAuditTol * m;
    }

    LineFunction slice(int m) const {
        LineFunction f(grid);
        for (int j = 0; j < grid.N; ++j) f.v[j] = at(j, m);
        return f;
    }
    void set_slice(int m, const LineFunction& f) {
        for (int j = 0; j < grid.N; ++j) at(j, m) = f.v[j];
    }
};

// ---------------------------------------------------------------------------
// Physical <-> spectral maps with the conventions above.

// 1-D: returns fhat_k at FFT bin order (k = 0..N-1, signed via kfreq).
inline std::vector<cplx> line_to_freq(const LineFunction& f) {
    std::vector<cplx> F = f.v;
    fft_forward(F);
    const double scale = f.grid.dx() / std::sqrt(2.0 * M_PI);
    for (int k = 0; k < f.grid.N; ++k) F[k] *= scale * ((k % 2 == 0) ? 1.0 : -1.0);
    return F;
}

inline LineFunction line_from_freq(const GridSpec& g, std::vector<cplx> F) {
    const double scale = g.dxi() / std::sqrt(2.0 * M_PI);
    for (int k = 0; k < g.N; ++k) F[k] *= scale * ((k % 2 == 0) ? 1.0 : -1.0);
    fft_backward(F);
    LineFunction f(g);
    f.v = std::move(F);
    return f;
}

// 2-D: uhat at bins [k*M + r].  The t0 phase is included so that uhat is the
// transform with respect to the physical time coordinate.
std::vector<cplx> field_to_freq(const SpaceTimeField& u);
SpaceTimeField field_from_freq(const GridSpec& g, std::vector<cplx> U);

// 1-D temporal transform of a trace: chat_r = dt/sqrt(2*pi) sum_m c_m e^{-i tau_r t_m}
std::vector<cplx> trace_to_freq(const TimeTrace& c);
TimeTrace trace_from_freq(const GridSpec& g, std::vector<cplx> C);

// ---------------------------------------------------------------------------
// The standard smooth cutoff: 1 on [-1,1], 0 outside [-2,2], C-infinity.
double eta_bump(double t);

}  // namespace zhl
