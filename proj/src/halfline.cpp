#include "zhl/halfline.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace zhl {

namespace {
constexpr double kExclusionTol = 1e-9;

bool near(double x, double y) { return std::abs(x - y) < kExclusionTol; }

std::pair<double, double> gains(double s0, double s1, bool critical) {
    if (critical) {
        // one-sided smoothing: the wave component only
        return {0.0, std::min(1.0, 1.5 - s1)};
    }
    const double a0 = std::min(std::min(0.5, s1 + 0.5), std::min(s1 - s0 + 1.0, 2.5 - s0));
    const double a1 = std::min(std::min(s0 - s1, 2 * s0 - s1 - 0.5), 1.5 - s1);
    return {a0, a1};
}
}  // namespace

RegularityPair admissible(double s0, double s1) {
    RegularityPair p;
    p.s0 = s0;
    p.s1 = s1;
    auto fail = [&](const std::string& msg) { p.violations.push_back(msg); };

    std::ostringstream os;
    if (!(s0 > kExclusionTol && s0 < 2.5 - kExclusionTol)) {
        os.str(""); os << "s0 = " << s0 << " outside (0, 5/2)"; fail(os.str());
    }
    if (near(s0, 0.5) || near(s0, 1.5)) {
        os.str(""); os << "s0 = " << s0 << " on the excluded set {1/2, 3/2}"; fail(os.str());
    }
    if (!(s1 > -0.5 + kExclusionTol && s1 < 1.5 - kExclusionTol)) {
        os.str(""); os << "s1 = " << s1 << " outside (-1/2, 3/2)"; fail(os.str());
    }
    if (near(s1, 0.5)) {
        os.str(""); os << "s1 = " << s1 << " on the excluded point 1/2"; fail(os.str());
    }
    const double gap = s0 - s1;
    if (!(gap > kExclusionTol)) {
        os.str(""); os << "s0 - s1 = " << gap << " <= 0"; fail(os.str());
    }
    if (gap > 1.0 + kExclusionTol) {
        os.str(""); os << "s0 - s1 = " << gap << " > 1"; fail(os.str());
    }
    if (!(2 * s0 > s1 + 0.5 + kExclusionTol)) {
        os.str(""); os << "2 s0 = " << 2 * s0 << " <= s1 + 1/2 = " << s1 + 0.5; fail(os.str());
    }
    if (!(s1 + 0.5 > kExclusionTol)) {
        os.str(""); os << "s1 + 1/2 = " << s1 + 0.5 << " <= 0"; fail(os.str());
    }

    p.admissible = p.violations.empty();
    p.critical = p.admissible && std::abs(gap - 1.0) <= kExclusionTol;
    if (p.admissible) {
        auto [a0, a1] = gains(s0, s1, p.critical);
        p.a0_sup = a0;
        p.a1_sup = a1;
    }
    return p;
}

std::pair<double, double> smoothing_exponents(const RegularityPair& pair) {
    if (!pair.admissible) throw std::domain_error("smoothing_exponents: pair is not admissible");
    return gains(pair.s0, pair.s1, pair.critical);
}

HalfLineFunction restrict_half(const LineFunction& f) {
    HalfLineFunction h(f.grid);
    const int j0 = f.grid.index_x0();
    for (int i = 0; i < h.size(); ++i) h.v[i] = f.v[j0 + i];
    return h;
}

ZeroExtension zero_extension(const HalfLineFunction& g, double s, double trace_tol) {
    const bool low = (s > -0.5 && s < 0.5);
    const bool mid = (s > 0.5 && s < 1.5);
    if (!low && !mid)
        throw std::domain_error("zero_extension: regularity must lie in (-1/2,1/2) or (1/2,3/2)");
    if (mid && std::abs(g.boundary_value()) > trace_tol) {
        std::ostringstream os;
        os << "zero_extension: for s in (1/2,3/2) the boundary value must vanish; got |g(0)| = "
           << std::abs(g.boundary_value());
        throw std::domain_error(os.str());
    }
    LineFunction e(g.grid);
    const int j0 = g.grid.index_x0();
    for (int i = 0; i < g.size(); ++i) e.v[j0 + i] = g.v[i];

    ZeroExtension out{std::move(e), 0.0};
    // half-line norm proxy: norm of the smooth extension (see module notes)
    const double whole = sobolev_norm(out.extension, s);
    const double proxy = sobolev_norm(smooth_extension(g), s);
    out.norm_ratio = proxy > 0 ? whole / proxy : 0.0;
    return out;
}

LineFunction smooth_extension(const HalfLineFunction& g) {
    const GridSpec& gr = g.grid;
    LineFunction e(gr);
    const int j0 = gr.index_x0();
    for (int i = 0; i < g.size(); ++i) e.v[j0 + i] = g.v[i];

    // g(-y) = 10 g(y) - 20 g(2y) + 15 g(3y) - 4 g(4y) matches value and three
    // derivatives at 0; taper keeps support inside |x| < L/2.
    auto sample = [&](double y) -> cplx {
        // y >= 0; nearest-sample read with zero beyond the stored range
        const int i = static_cast<int>(std::lround(y / gr.dx()));
        if (i < 0 || i >= g.size()) return cplx(0, 0);
        return g.v[i];
    };
    const double taper_scale = gr.L / 8.0;  // support of the reflection: |x| <= L/4
    for (int j = 0; j < j0; ++j) {
        const double x = gr.x(j);  // x < 0
        const double y = -x;
        const double taper = eta_bump(y / taper_scale);
        if (taper == 0.0) continue;
        const cplx val = 10.0 * sample(y) - 20.0 * sample(2 * y) + 15.0 * sample(3 * y) - 4.0 * sample(4 * y);
        e.v[j] = taper * val;
    }
    return e;
}

PsiPair psi_pm(const LineFunction& n0e, const LineFunction& n1e, double mean_tol) {
    if (n0e.grid != n1e.grid) throw std::invalid_argument("psi_pm: grid mismatch");
    const cplx mean = mean_value(n1e);
    if (std::abs(mean) > mean_tol) {
        std::ostringstream os;
        os << "psi_pm: n1 extension must be mean-zero (derivative form); mean = " << std::abs(mean);
        throw std::invalid_argument(os.str());
    }
    LineFunction prim = anchored_primitive(n1e);
    PsiPair out{n0e, n0e};
    for (int j = 0; j < n0e.grid.N; ++j) {
        out.psi_plus.v[j] = n0e.v[j] + prim.v[j];
        out.psi_minus.v[j] = n0e.v[j] - prim.v[j];
    }
    return out;
}

CompatibilityReport compatibility_check(const HalfLineFunction& g, const TimeTrace& h, double s0,
                                        const HalfLineFunction& n0, const TimeTrace& f, double s1, double tol) {
    CompatibilityReport rep;
    rep.u_required = s0 > 0.5;
    rep.n_required = s1 > 0.5;
    const int m0 = h.grid.index_t0();
    if (rep.u_required) {
        rep.u_mismatch = std::abs(h.v[m0] - g.boundary_value());
        rep.u_ok = rep.u_mismatch <= tol;
    }
    if (rep.n_required) {
        rep.n_mismatch = std::abs(f.v[m0] - n0.boundary_value());
        rep.n_ok = rep.n_mismatch <= tol;
    }
    return rep;
}

ApproximateExtension approximate_extension(const HalfLineFunction& g, double s, const HalfLineFunction& f,
                                           const LineFunction& g_e, double r, double delta) {
    if (!(s > -0.5 && s < 0.5))
        throw std::domain_error("approximate_extension: regularity must lie in (-1/2, 1/2)");
    const GridSpec& gr = g.grid;
    if (delta <= 0) delta = 4.0 * gr.dx();

    // mismatch g - f on the half line, zero-extended (valid in this range)
    HalfLineFunction diff(gr);
    for (int i = 0; i < diff.size(); ++i) diff.v[i] = g.v[i] - f.v[i];
    LineFunction h_ext(gr);
    {
        const int j0 = gr.index_x0();
        for (int i = 0; i < diff.size(); ++i) h_ext.v[j0 + i] = diff.v[i];
    }

    LineFunction f_tilde = smooth_extension(f);

    // psi = g_e - f_tilde - h_ext is supported in x <= 0
    LineFunction psi(gr);
    for (int j = 0; j < gr.N; ++j) psi.v[j] = g_e.v[j] - f_tilde.v[j] - h_ext.v[j];

    // truncate to x < -delta, then mollify with a 4th-order kernel of width delta
    LineFunction chi_psi(gr);
    for (int j = 0; j < gr.N; ++j) chi_psi.v[j] = (gr.x(j) < -delta) ? psi.v[j] : cplx(0, 0);

    // kernel rho(u) = c (1-u^2)^3 (a - b u^2) on [-1,1], unit mass, zero 2nd moment
    // moments of (1-u^2)^3 u^{2m} on [-1,1]: m0 = 32/35, m1 = 32/315, m2 = 32/1155
    const double m0 = 32.0 / 35.0, m1 = 32.0 / 315.0, m2 = 32.0 / 1155.0;
    // solve a*m0 - b*m1 = 1, a*m1 - b*m2 = 0 (then c = 1)
    const double det = m1 * m1 - m0 * m2;
    const double a = -m2 / det, b = -m1 / det;
    std::vector<cplx> kern(gr.N, cplx(0, 0));
    double ksum = 0;
    for (int j = 0; j < gr.N; ++j) {
        double u = gr.x(j) / delta;  // centered at x = 0 up to periodic wrap
        if (std::abs(u) >= 1.0) continue;
        const double u2 = u * u;
        const double val = std::pow(1.0 - u2, 3) * (a - b * u2);
        kern[j] = val;
        ksum += val;
    }
    for (auto& z : kern) z /= ksum;  // exact discrete unit mass

    // circular convolution via FFT
    auto A = chi_psi.v;
    auto B = kern;
    fft_forward(A);
    fft_forward(B);
    for (int j = 0; j < gr.N; ++j) A[j] *= B[j];
    fft_backward(A);
    LineFunction phi(gr);
    const double inv = 1.0 / gr.N;
    // kernel is centered at index 0 after the x(j) indexing above shifted by -L;
    // undo the -L offset so the mollifier is centered at 0
    // x(j) = -L + j dx, so kernel support sits near j = N/2 * ... recenter:
    for (int j = 0; j < gr.N; ++j) phi.v[j] = A[(j + gr.index_x0()) % gr.N] * inv;

    LineFunction f_e(gr);
    for (int j = 0; j < gr.N; ++j) f_e.v[j] = f_tilde.v[j] + phi.v[j];

    LineFunction d(gr);
    for (int j = 0; j < gr.N; ++j) d.v[j] = g_e.v[j] - f_e.v[j];
    return {std::move(f_e), sobolev_norm(d, r)};
}

}  // namespace zhl
