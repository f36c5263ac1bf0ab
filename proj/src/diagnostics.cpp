#include "ecsim/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ecsim/fft.hpp"
#include "ecsim/operators.hpp"

namespace ecsim {
namespace {

double sq(double x) { return x * x; }

std::size_t mode_index(const Grid& g, int m1, int m2) {
    const int i = m1 >= 0 ? m1 : m1 + g.n;
    const int j = m2 >= 0 ? m2 : m2 + g.n;
    return g.idx(i, j);
}

}  // namespace

void check_probe_modes(const Grid& g, const ProbeModes& modes) {
    for (const auto& m : modes) {
        if (m[0] == 0 && m[1] == 0)
            throw std::invalid_argument("fourier_probe: zero mode in probe set");
        if (g.aliased(m[0], m[1]))
            throw std::invalid_argument("fourier_probe: probe mode outside resolved band");
    }
}

MomentResult moment(const SpectralScalar& q_hat) {
    const Grid& g = q_hat.grid;
    PhysicalScalar q = inverse(q_hat);
    const double half = 0.5 * g.half_period;
    double total = 0.0, outside = 0.0, weighted = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const double x1 = g.x(i);
        for (int j = 0; j < g.n; ++j) {
            const double x2 = g.x(j);
            const double q2 = sq(q.v[g.idx(i, j)]);
            total += q2;
            weighted += (1.0 + x1 * x1 + x2 * x2) * q2;
            if (std::fabs(x1) >= half || std::fabs(x2) >= half) outside += q2;
        }
    }
    const double h2 = sq(g.spacing());
    MomentResult r;
    r.value = std::sqrt(h2 * weighted);
    r.support_ok = outside <= 0.01 * total || total == 0.0;
    return r;
}

TimeSeriesRecord record(const SimState& s, const SpectralScalar& Q_hat,
                        const SpectralVector& U_hat, const ProbeModes& probe_modes,
                        double splitting_r) {
    const Grid& g = s.q_hat.grid;
    if (!(Q_hat.grid == g) || !(U_hat.grid() == g))
        throw std::invalid_argument("record: comparison fields on a different grid");
    check_probe_modes(g, probe_modes);

    TimeSeriesRecord r;
    r.t = s.t;
    r.l2q2 = sq(norm_l2(s.q_hat));
    r.l2u2 = sq(norm_l2(s.u_hat));
    r.l4q4 = std::pow(norm_l4(s.q_hat), 4);
    r.h1q2 = sq(norm_hs(s.q_hat, 1.0));
    r.h1u2 = sq(norm_hs(s.u_hat, 1.0));
    r.h2q2 = sq(norm_hs(s.q_hat, 2.0));
    r.h2u2 = sq(norm_hs(s.u_hat, 2.0));
    r.w14u = norm_w14(s.u_hat);
    r.moment = moment(s.q_hat).value;
    r.mean_q = s.q_hat.mean().real();

    const double box = sq(2.0 * g.half_period);
    double dq = 0.0, du = 0.0, low = 0.0, high = 0.0;
    const double rho = splitting_r / (2.0 * (1.0 + s.t));
    for (int i = 0; i < g.n; ++i) {
        const double k1 = g.k(i);
        for (int j = 0; j < g.n; ++j) {
            const double k2 = g.k(j);
            const std::size_t idx = g.idx(i, j);
            dq += std::norm(s.q_hat.c[idx] - Q_hat.c[idx]);
            du += std::norm(s.u_hat.c1.c[idx] - U_hat.c1.c[idx]) +
                  std::norm(s.u_hat.c2.c[idx] - U_hat.c2.c[idx]);
            const double e = std::norm(s.q_hat.c[idx]);
            if (std::sqrt(k1 * k1 + k2 * k2) <= rho)
                low += e;
            else
                high += e;
        }
    }
    r.diffq2 = box * dq;
    r.diffu2 = box * du;
    r.shell_low_q = box * low;
    r.shell_high_q = box * high;

    for (const auto& m : probe_modes) {
        const std::size_t idx = mode_index(g, m[0], m[1]);
        const double kn =
            (kPi / g.half_period) * std::sqrt(double(m[0]) * m[0] + double(m[1]) * m[1]);
        const double zr = std::abs(s.q_hat.c[idx] - Q_hat.c[idx]) * box / kn;
        const double vr = std::sqrt(std::norm(s.u_hat.c1.c[idx] - U_hat.c1.c[idx]) +
                                    std::norm(s.u_hat.c2.c[idx] - U_hat.c2.c[idx])) *
                          box / kn;
        r.probe_zeta_max = std::max(r.probe_zeta_max, zr);
        r.probe_v_max = std::max(r.probe_v_max, vr);
    }
    return r;
}

FitResult fit_exponent(const std::vector<std::pair<double, double>>& series, double t_lo,
                       double t_hi) {
    if (t_lo < 1.0) throw std::invalid_argument("fit_exponent: window must start at t >= 1");
    if (!(t_hi > t_lo)) throw std::invalid_argument("fit_exponent: empty window");

    std::vector<double> xs, ys;
    for (const auto& [t, y] : series) {
        if (t < t_lo || t > t_hi) continue;
        if (!(y > 0.0))
            throw std::invalid_argument("fit_exponent: nonpositive sample in window");
        xs.push_back(std::log(1.0 + t));
        ys.push_back(std::log(y));
    }
    const int n = static_cast<int>(xs.size());
    if (n < 20) throw std::invalid_argument("fit_exponent: fewer than 20 samples in window");

    double sx = 0.0, sy = 0.0;
    for (int i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += sq(xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    FitResult f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.t_lo = t_lo;
    f.t_hi = t_hi;
    f.n_samples = n;
    double rss = 0.0;
    for (int i = 0; i < n; ++i) rss += sq(ys[i] - (f.intercept + f.slope * xs[i]));
    f.rms_residual = std::sqrt(rss / n);
    return f;
}

double sup_constant(const std::vector<std::pair<double, double>>& series, double p, double t_lo,
                    double t_hi) {
    double m = 0.0;
    for (const auto& [t, y] : series) {
        if (t < t_lo || t > t_hi) continue;
        m = std::max(m, std::pow(1.0 + t, p) * y);
    }
    return m;
}

std::vector<double> fourier_probe(const SpectralScalar& f, const ProbeModes& modes) {
    const Grid& g = f.grid;
    check_probe_modes(g, modes);
    const double box = sq(2.0 * g.half_period);
    std::vector<double> out;
    out.reserve(modes.size());
    for (const auto& m : modes) {
        const double kn =
            (kPi / g.half_period) * std::sqrt(double(m[0]) * m[0] + double(m[1]) * m[1]);
        out.push_back(std::abs(f.c[mode_index(g, m[0], m[1])]) * box / kn);
    }
    return out;
}

std::vector<double> fourier_probe(const SpectralVector& v, const ProbeModes& modes) {
    const Grid& g = v.grid();
    check_probe_modes(g, modes);
    const double box = sq(2.0 * g.half_period);
    std::vector<double> out;
    out.reserve(modes.size());
    for (const auto& m : modes) {
        const std::size_t idx = mode_index(g, m[0], m[1]);
        const double kn =
            (kPi / g.half_period) * std::sqrt(double(m[0]) * m[0] + double(m[1]) * m[1]);
        out.push_back(std::sqrt(std::norm(v.c1.c[idx]) + std::norm(v.c2.c[idx])) * box / kn);
    }
    return out;
}

}  // namespace ecsim
