#include "zhl/norms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zhl {

namespace {

void require_finite(const LineFunction& f, const char* who) {
    if (!f.finite()) throw std::invalid_argument(std::string(who) + ": non-finite samples");
}
void require_decay(const LineFunction& f, const char* who) {
    if (!f.decays())
        throw std::invalid_argument(std::string(who) + ": samples do not decay below tolerance at |x| >= L/2");
}
void require_time_support(const SpaceTimeField& w, const char* who) {
    if (!w.finite()) throw std::invalid_argument(std::string(who) + ": non-finite samples");
    if (!w.time_supported())
        throw std::invalid_argument(std::string(who) +
                                    ": field has mass near the time box edges; enlarge the box padding");
}

}  // namespace

double sobolev_norm(const LineFunction& f, double s) {
    require_finite(f, "sobolev_norm");
    require_decay(f, "sobolev_norm");
    auto F = line_to_freq(f);
    double acc = 0;
    for (int k = 0; k < f.grid.N; ++k) {
        const double w = std::pow(japanese_bracket(f.grid.xi(k)), s);
        acc += w * w * std::norm(F[k]);
    }
    return std::sqrt(acc * f.grid.dxi());
}

cplx mean_value(const LineFunction& f) {
    cplx s = 0;
    for (auto& z : f.v) s += z;
    return s / static_cast<double>(f.grid.N);
}

Antiderivative antiderivative(const LineFunction& f) {
    auto F = line_to_freq(f);
    const cplx mean = F[0] * std::sqrt(2.0 * M_PI) / (2.0 * f.grid.L);
    F[0] = 0.0;
    for (int k = 1; k < f.grid.N; ++k) F[k] /= cplx(0.0, f.grid.xi(k));
    return {line_from_freq(f.grid, std::move(F)), mean};
}

LineFunction anchored_primitive(const LineFunction& f) {
    auto P = antiderivative(f).primitive;
    const cplx edge = P.v[0];
    for (auto& z : P.v) z -= edge;
    return P;
}

LineFunction spectral_derivative(const LineFunction& f) {
    auto F = line_to_freq(f);
    for (int k = 0; k < f.grid.N; ++k) F[k] *= cplx(0.0, f.grid.xi(k));
    return line_from_freq(f.grid, std::move(F));
}

double hat_sobolev_norm(const LineFunction& f, double s, double mean_tol) {
    require_finite(f, "hat_sobolev_norm");
    const cplx mean = mean_value(f);
    if (std::abs(mean) > mean_tol) {
        std::ostringstream os;
        os << "hat_sobolev_norm: input has nonzero mean " << std::abs(mean) << " (tolerance " << mean_tol
           << "); the primitive would carry this mass as a linear trend";
        throw std::invalid_argument(os.str());
    }
    // the decay-anchored primitive is the continuum d_x^{-1} of a function
    // whose integral vanishes; the mean-zero primitive differs by a constant
    // that would not decay at the box edges
    return sobolev_norm(anchored_primitive(f), s + 1.0);
}

double xsb_norm_freq(const GridSpec& g, const std::vector<cplx>& U, double s, double b) {
    double acc = 0;
    for (int k = 0; k < g.N; ++k) {
        const double xi = g.xi(k);
        const double wx = std::pow(japanese_bracket(xi), s);
        for (int r = 0; r < g.M; ++r) {
            const double wt = std::pow(japanese_bracket(g.tau(r) + xi * xi), b);
            acc += wx * wx * wt * wt * std::norm(U[static_cast<std::size_t>(k) * g.M + r]);
        }
    }
    return std::sqrt(acc * g.dxi() * g.dtau());
}

double ysb_pm_norm_freq(const GridSpec& g, const std::vector<cplx>& U, double s, double b, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("ysb_pm_norm: sign must be +1 or -1");
    double acc = 0;
    for (int k = 0; k < g.N; ++k) {
        const double xi = g.xi(k);
        const double wx = std::pow(japanese_bracket(xi), s);
        for (int r = 0; r < g.M; ++r) {
            const double wt = std::pow(japanese_bracket(g.tau(r) - sign * xi), b);
            acc += wx * wx * wt * wt * std::norm(U[static_cast<std::size_t>(k) * g.M + r]);
        }
    }
    return std::sqrt(acc * g.dxi() * g.dtau());
}

double ysb_norm_freq(const GridSpec& g, const std::vector<cplx>& U, double s, double b) {
    double acc = 0;
    for (int k = 0; k < g.N; ++k) {
        const double xi = g.xi(k);
        const double wx = std::pow(japanese_bracket(xi), s);
        for (int r = 0; r < g.M; ++r) {
            const double tau = g.tau(r);
            const double wp = wx * std::pow(japanese_bracket(tau - xi), b);
            const double wm = wx * std::pow(japanese_bracket(tau + xi), b);
            const double h2 = (wp * wp * wm * wm) / (wp * wp + wm * wm);
            acc += h2 * std::norm(U[static_cast<std::size_t>(k) * g.M + r]);
        }
    }
    return std::sqrt(acc * g.dxi() * g.dtau());
}

double z_norm_freq(const GridSpec& g, const std::vector<cplx>& U, double s0) {
    double acc = 0;
    for (int k = 0; k < g.N; ++k) {
        const double xi = g.xi(k);
        double l1 = 0;
        for (int r = 0; r < g.M; ++r)
            l1 += std::abs(U[static_cast<std::size_t>(k) * g.M + r]) / japanese_bracket(g.tau(r) + xi * xi);
        l1 *= g.dtau();
        const double wx = std::pow(japanese_bracket(xi), s0);
        acc += wx * wx * l1 * l1;
    }
    return std::sqrt(acc * g.dxi());
}

double xsb_norm(const SpaceTimeField& w, double s, double b) {
    require_time_support(w, "xsb_norm");
    return xsb_norm_freq(w.grid, field_to_freq(w), s, b);
}

double ysb_pm_norm(const SpaceTimeField& w, double s, double b, int sign) {
    require_time_support(w, "ysb_pm_norm");
    return ysb_pm_norm_freq(w.grid, field_to_freq(w), s, b, sign);
}

double ysb_norm(const SpaceTimeField& w, double s, double b) {
    require_time_support(w, "ysb_norm");
    return ysb_norm_freq(w.grid, field_to_freq(w), s, b);
}

double z_norm(const SpaceTimeField& w, double s0) {
    require_time_support(w, "z_norm");
    return z_norm_freq(w.grid, field_to_freq(w), s0);
}

double trace_sobolev_norm(const TimeTrace& h, double s) {
    auto C = trace_to_freq(h);
    double acc = 0;
    for (int r = 0; r < h.grid.M; ++r) {
        const double w = std::pow(japanese_bracket(h.grid.tau(r)), s);
        acc += w * w * std::norm(C[r]);
    }
    return std::sqrt(acc * h.grid.dtau());
}

// --- random data -------------------------------------------------------------

static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double hash_u01(std::uint64_t seed, std::int64_t k0, std::int64_t k1) {
    std::uint64_t h = splitmix64(seed ^ 0x7b4d5cfe9a11c3d7ULL);
    h = splitmix64(h ^ static_cast<std::uint64_t>(k0));
    h = splitmix64(h ^ static_cast<std::uint64_t>(k1));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

namespace {

// window keeping content in |x| <= L/4, zero beyond L/2
LineFunction spatial_window(const GridSpec& g) {
    LineFunction w(g);
    for (int j = 0; j < g.N; ++j) w.v[j] = eta_bump(g.x(j) / (g.L / 4.0));
    return w;
}

}  // namespace

static LineFunction make_random_line(const GridSpec& g, double s, std::uint64_t seed, double amplitude,
                                     double slack, double band, bool real_valued) {
    const double bandmax = band > 0 ? band : 2.0 * g.dxi() * (g.N / 2);  // effectively no cap
    std::vector<cplx> F(g.N, cplx(0, 0));
    for (int k = 0; k < g.N; ++k) {
        const double xi = g.xi(k);
        if (std::abs(xi) > bandmax) continue;
        const double mag = std::pow(japanese_bracket(xi), -s - 0.5 - slack);
        const double ph = 2.0 * M_PI * hash_u01(seed, g.kfreq(k, g.N));
        F[k] = std::polar(mag, ph);
    }
    if (real_valued) {
        // Hermitian symmetrize: fhat(-xi) = conj(fhat(xi))
        std::vector<cplx> H = F;
        for (int k = 0; k < g.N; ++k) {
            int kneg = (g.N - k) % g.N;
            H[k] = 0.5 * (F[k] + std::conj(F[kneg]));
        }
        H[0] = H[0].real();
        H[g.N / 2] = H[g.N / 2].real();
        F = std::move(H);
    }
    LineFunction f = line_from_freq(g, std::move(F));
    LineFunction w = spatial_window(g);
    for (int j = 0; j < g.N; ++j) f.v[j] *= w.v[j];
    const double n = sobolev_norm(f, s);
    if (n > 0)
        for (auto& z : f.v) z *= amplitude / n;
    return f;
}

LineFunction random_sobolev_sample(const GridSpec& g, double s, std::uint64_t seed, double amplitude, double slack,
                                   double band) {
    return make_random_line(g, s, seed, amplitude, slack, band, false);
}

LineFunction random_sobolev_sample_real(const GridSpec& g, double s, std::uint64_t seed, double amplitude,
                                        double slack, double band) {
    return make_random_line(g, s, seed, amplitude, slack, band, true);
}

namespace {

// smooth temporal window: 1 on the middle 7/16 of the box, 0 within 1/8 of the edges
double time_window(const GridSpec& g, double t) {
    const double mid = g.t0 + g.T_box / 2.0;
    const double half = g.T_box / 2.0;
    return eta_bump((t - mid) / (0.4375 * half));
}

SpaceTimeField finalize_spacetime(const GridSpec& g, std::vector<cplx> U, bool real_valued) {
    if (real_valued) {
        std::vector<cplx> H = U;
        for (int k = 0; k < g.N; ++k)
            for (int r = 0; r < g.M; ++r) {
                int kn = (g.N - k) % g.N;
                int rn = (g.M - r) % g.M;
                H[static_cast<std::size_t>(k) * g.M + r] =
                    0.5 * (U[static_cast<std::size_t>(k) * g.M + r] +
                           std::conj(U[static_cast<std::size_t>(kn) * g.M + rn]));
            }
        U = std::move(H);
    }
    // build with zero t0-phase bookkeeping via field_from_freq
    SpaceTimeField w = field_from_freq(g, std::move(U));
    for (int j = 0; j < g.N; ++j)
        for (int m = 0; m < g.M; ++m) {
            const double win = eta_bump(g.x(j) / (g.L / 4.0)) * time_window(g, g.t(m));
            w.at(j, m) *= win;
        }
    if (real_valued)
        for (auto& z : w.v) z = z.real();
    return w;
}

}  // namespace

SpaceTimeField random_xsb_sample(const GridSpec& g, double s, double b, std::uint64_t seed, double amplitude,
                                 double slack, double band_x, double band_t) {
    const double bx = band_x > 0 ? band_x : 2.0 * g.dxi() * (g.N / 2);
    const double bt = band_t > 0 ? band_t : 2.0 * g.dtau() * (g.M / 2);
    std::vector<cplx> U(static_cast<std::size_t>(g.N) * g.M, cplx(0, 0));
    for (int k = 0; k < g.N; ++k) {
        const double xi = g.xi(k);
        if (std::abs(xi) > bx) continue;
        const double wx = std::pow(japanese_bracket(xi), -s - 0.5 - slack);
        for (int r = 0; r < g.M; ++r) {
            const double tau = g.tau(r);
            if (std::abs(tau) > bt) continue;
            const double wt = std::pow(japanese_bracket(tau + xi * xi), -b - 0.5 - slack);
            const double ph = 2.0 * M_PI * hash_u01(seed, g.kfreq(k, g.N), g.kfreq(r, g.M));
            U[static_cast<std::size_t>(k) * g.M + r] = std::polar(wx * wt, ph);
        }
    }
    SpaceTimeField w = finalize_spacetime(g, std::move(U), false);
    const double n = xsb_norm(w, s, b);
    if (n > 0)
        for (auto& z : w.v) z *= amplitude / n;
    return w;
}

SpaceTimeField random_ysb_sample(const GridSpec& g, double s, double b, int sign, bool real_valued,
                                 std::uint64_t seed, double amplitude, double slack, double band_x, double band_t) {
    const double bx = band_x > 0 ? band_x : 2.0 * g.dxi() * (g.N / 2);
    const double bt = band_t > 0 ? band_t : 2.0 * g.dtau() * (g.M / 2);
    std::vector<cplx> U(static_cast<std::size_t>(g.N) * g.M, cplx(0, 0));
    for (int k = 0; k < g.N; ++k) {
        const double xi = g.xi(k);
        if (std::abs(xi) > bx) continue;
        const double wx = std::pow(japanese_bracket(xi), -s - 0.5 - slack);
        for (int r = 0; r < g.M; ++r) {
            const double tau = g.tau(r);
            if (std::abs(tau) > bt) continue;
            double wt;
            if (sign == 1)
                wt = std::pow(japanese_bracket(tau - xi), -b - 0.5 - slack);
            else if (sign == -1)
                wt = std::pow(japanese_bracket(tau + xi), -b - 0.5 - slack);
            else
                wt = std::pow(japanese_bracket(tau - xi), -b - 0.5 - slack) +
                     std::pow(japanese_bracket(tau + xi), -b - 0.5 - slack);
            const double ph = 2.0 * M_PI * hash_u01(seed ^ 0x5bd1e995ULL, g.kfreq(k, g.N), g.kfreq(r, g.M));
            U[static_cast<std::size_t>(k) * g.M + r] = std::polar(wx * wt, ph);
        }
    }
    SpaceTimeField w = finalize_spacetime(g, std::move(U), real_valued);
    const double n = ysb_norm(w, s, b);
    if (n > 0)
        for (auto& z : w.v) z *= amplitude / n;
    return w;
}

// --- field helpers ------------------------------------------------------------

SpaceTimeField multiply_pointwise(const SpaceTimeField& a, const SpaceTimeField& b) {
    if (a.grid != b.grid) throw std::invalid_argument("multiply_pointwise: grid mismatch");
    SpaceTimeField c(a.grid);
    for (std::size_t i = 0; i < a.v.size(); ++i) c.v[i] = a.v[i] * b.v[i];
    return c;
}

SpaceTimeField multiply_fields(const SpaceTimeField& a, const SpaceTimeField& b) {
    if (a.grid != b.grid) throw std::invalid_argument("multiply_fields: grid mismatch");
    // dealiased product: zero-pad both factors 2x in each dimension,
    // multiply in physical space, truncate back
    GridSpec fine(a.grid.L, 2 * a.grid.N, a.grid.T_box, 2 * a.grid.M, a.grid.t0);
    SpaceTimeField af = inject(a, fine);
    SpaceTimeField bf = inject(b, fine);
    SpaceTimeField cf = multiply_pointwise(af, bf);
    // truncate spectrum back to the coarse grid
    auto C = field_to_freq(cf);
    std::vector<cplx> Uc(static_cast<std::size_t>(a.grid.N) * a.grid.M, cplx(0, 0));
    const GridSpec& g = a.grid;
    for (int k = 0; k < g.N; ++k) {
        int kk = g.kfreq(k, g.N);
        int kf = kk >= 0 ? kk : kk + fine.N;
        for (int r = 0; r < g.M; ++r) {
            int rr = g.kfreq(r, g.M);
            int rf = rr >= 0 ? rr : rr + fine.M;
            Uc[static_cast<std::size_t>(k) * g.M + r] = C[static_cast<std::size_t>(kf) * fine.M + rf];
        }
    }
    return field_from_freq(g, std::move(Uc));
}

SpaceTimeField scale_field(const SpaceTimeField& a, cplx c) {
    SpaceTimeField r = a;
    for (auto& z : r.v) z *= c;
    return r;
}

SpaceTimeField add_fields(const SpaceTimeField& a, const SpaceTimeField& b, cplx cb) {
    if (a.grid != b.grid) throw std::invalid_argument("add_fields: grid mismatch");
    SpaceTimeField r = a;
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] += cb * b.v[i];
    return r;
}

SpaceTimeField apply_eta_window(const SpaceTimeField& a, double t_scale) {
    SpaceTimeField r = a;
    for (int m = 0; m < a.grid.M; ++m) {
        const double w = eta_bump(a.grid.t(m) / t_scale);
        for (int j = 0; j < a.grid.N; ++j) r.at(j, m) *= w;
    }
    return r;
}

LineFunction line_dx(const LineFunction& f) { return spectral_derivative(f); }

SpaceTimeField field_dx(const SpaceTimeField& a) {
    const GridSpec& g = a.grid;
    SpaceTimeField r(g);
    std::vector<cplx> buf(g.N);
    for (int m = 0; m < g.M; ++m) {
        for (int j = 0; j < g.N; ++j) buf[j] = a.at(j, m);
        fft_forward(buf);
        for (int k = 0; k < g.N; ++k) buf[k] *= cplx(0.0, g.xi(k));
        fft_backward(buf);
        const double inv = 1.0 / g.N;
        for (int j = 0; j < g.N; ++j) r.at(j, m) = buf[j] * inv;
    }
    return r;
}

LineFunction inject(const LineFunction& f, const GridSpec& fine) {
    if (fine.L != f.grid.L) throw std::invalid_argument("inject: boxes differ");
    if (fine.N < f.grid.N) throw std::invalid_argument("inject: target must be finer");
    auto F = line_to_freq(f);
    std::vector<cplx> G(fine.N, cplx(0, 0));
    const int nc = f.grid.N;
    for (int k = 0; k < nc; ++k) {
        int kk = f.grid.kfreq(k, nc);
        if (fine.N > nc && kk == -nc / 2) {
            // split the coarse Nyquist bin symmetrically so real stays real
            G[fine.N - nc / 2] = 0.5 * F[k];
            G[nc / 2] = 0.5 * F[k];
        } else {
            int kf = kk >= 0 ? kk : kk + fine.N;
            G[kf] = F[k];
        }
    }
    return line_from_freq(fine, std::move(G));
}

SpaceTimeField inject(const SpaceTimeField& u, const GridSpec& fine) {
    const GridSpec& g = u.grid;
    if (fine.L != g.L || fine.T_box != g.T_box || fine.t0 != g.t0)
        throw std::invalid_argument("inject: boxes differ");
    auto U = field_to_freq(u);
    std::vector<cplx> G(static_cast<std::size_t>(fine.N) * fine.M, cplx(0, 0));
    for (int k = 0; k < g.N; ++k) {
        int kk = g.kfreq(k, g.N);
        int kf = kk >= 0 ? kk : kk + fine.N;
        for (int r = 0; r < g.M; ++r) {
            int rr = g.kfreq(r, g.M);
            int rf = rr >= 0 ? rr : rr + fine.M;
            G[static_cast<std::size_t>(kf) * fine.M + rf] = U[static_cast<std::size_t>(k) * g.M + r];
        }
    }
    return field_from_freq(fine, std::move(G));
}

TimeTrace inject(const TimeTrace& c, const GridSpec& fine) {
    const GridSpec& g = c.grid;
    if (fine.T_box != g.T_box || fine.t0 != g.t0) throw std::invalid_argument("inject: time boxes differ");
    auto C = trace_to_freq(c);
    std::vector<cplx> G(fine.M, cplx(0, 0));
    for (int r = 0; r < g.M; ++r) {
        int rr = g.kfreq(r, g.M);
        int rf = rr >= 0 ? rr : rr + fine.M;
        G[rf] = C[r];
    }
    return trace_from_freq(fine, std::move(G));
}

}  // namespace zhl
