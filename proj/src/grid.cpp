#include "zhl/grid.hpp"

namespace zhl {

std::vector<cplx> field_to_freq(const SpaceTimeField& u) {
    const GridSpec& g = u.grid;
    std::vector<cplx> U = u.v;
    fft2_forward(U, g.N, g.M);
    const double scale = g.dx() * g.dt() / (2.0 * M_PI);
    for (int k = 0; k < g.N; ++k) {
        const double sk = (k % 2 == 0) ? 1.0 : -1.0;
        for (int r = 0; r < g.M; ++r) {
            // e^{-i tau_r t0} accounts for the time box not starting at 0
            const cplx ph = std::polar(1.0, -g.tau(r) * g.t0);
            U[static_cast<std::size_t>(k) * g.M + r] *= scale * sk * ph;
        }
    }
    return U;
}

SpaceTimeField field_from_freq(const GridSpec& g, std::vector<cplx> U) {
    const double scale = g.dxi() * g.dtau() / (2.0 * M_PI);
    for (int k = 0; k < g.N; ++k) {
        const double sk = (k % 2 == 0) ? 1.0 : -1.0;
        for (int r = 0; r < g.M; ++r) {
            const cplx ph = std::polar(1.0, g.tau(r) * g.t0);
            U[static_cast<std::size_t>(k) * g.M + r] *= scale * sk * ph;
        }
    }
    fft2_backward(U, g.N, g.M);
    SpaceTimeField u(g);
    u.v = std::move(U);
    return u;
}

std::vector<cplx> trace_to_freq(const TimeTrace& c) {
    const GridSpec& g = c.grid;
    std::vector<cplx> C = c.v;
    fft_forward(C);
    const double scale = g.dt() / std::sqrt(2.0 * M_PI);
    for (int r = 0; r < g.M; ++r) C[r] *= scale * std::polar(1.0, -g.tau(r) * g.t0);
    return C;
}

TimeTrace trace_from_freq(const GridSpec& g, std::vector<cplx> C) {
    const double scale = g.dtau() / std::sqrt(2.0 * M_PI);
    for (int r = 0; r < g.M; ++r) C[r] *= scale * std::polar(1.0, g.tau(r) * g.t0);
    fft_backward(C);
    TimeTrace c(g);
    c.v = std::move(C);
    return c;
}

double eta_bump(double t) {
    const double a = std::abs(t);
    if (a <= 1.0) return 1.0;
    if (a >= 2.0) return 0.0;
    // partition-of-unity transition built from B(u) = exp(-1/u)
    const double b1 = std::exp(-1.0 / (2.0 - a));  // nonzero for a < 2
    const double b2 = std::exp(-1.0 / (a - 1.0));  // nonzero for a > 1
    return b1 / (b1 + b2);
}

}  // namespace zhl
