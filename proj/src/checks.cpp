#include "ecsim/checks.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "ecsim/fft.hpp"
#include "ecsim/operators.hpp"
#include "ecsim/semigroup.hpp"

namespace ecsim {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

double central_half_leak(const PhysicalScalar& f) {
    const Grid& g = f.grid;
    const double half = 0.5 * g.half_period;
    double inside = 0.0, outside = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const double xi = g.x(i);
        for (int j = 0; j < g.n; ++j) {
            const double w = f.v[g.idx(i, j)] * f.v[g.idx(i, j)];
            if (std::abs(xi) <= half && std::abs(g.x(j)) <= half)
                inside += w;
            else
                outside += w;
        }
    }
    const double total = inside + outside;
    return total > 0.0 ? outside / total : 0.0;
}

double quadrature_inner(const PhysicalScalar& a, const PhysicalScalar& b) {
    const double h = a.grid.spacing();
    double s = 0.0;
    for (std::size_t i = 0; i < a.v.size(); ++i) s += a.v[i] * b.v[i];
    return s * h * h;
}

// Inhomogeneous H2 norm (Bessel weights (1+|k|^2)^2 on the energy).
double h2_norm(const SpectralVector& u) {
    const Grid& g = u.grid();
    const double box = (2.0 * g.half_period) * (2.0 * g.half_period);
    double s = 0.0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            const double kk = g.k(i) * g.k(i) + g.k(j) * g.k(j);
            const double w = (1.0 + kk) * (1.0 + kk);
            const std::size_t id = g.idx(i, j);
            s += w * (std::norm(u.c1.c[id]) + std::norm(u.c2.c[id]));
        }
    return std::sqrt(box * s);
}

// Localized mean-free charge bump at x0: a Gaussian of width sigma minus a
// same-mass Gaussian of width 2 sigma (subtracting a constant instead would
// smear mass across the whole box and break the central-support requirement).
SpectralScalar bump_field(const Grid& g, double amp, double sigma, double x01, double x02) {
    SpectralScalar out(g);
    const double box = (2.0 * g.half_period) * (2.0 * g.half_period);
    const double pref = amp * kTwoPi * sigma * sigma / box;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            if (g.aliased(g.mode(i), g.mode(j))) continue;
            const double k1 = g.k(i), k2 = g.k(j);
            const double kk = k1 * k1 + k2 * k2;
            const double mag = pref * (std::exp(-0.5 * sigma * sigma * kk) -
                                       std::exp(-2.0 * sigma * sigma * kk));
            const double ph = -(k1 * x01 + k2 * x02);
            out.c[g.idx(i, j)] = mag * cplx(std::cos(ph), std::sin(ph));
        }
    out.c[0] = 0.0;
    return out;
}

// Divergence-free velocity from a stream function: u = (-d2 psi, d1 psi).
SpectralVector rot_grad(const SpectralScalar& psi) {
    const Grid& g = psi.grid;
    SpectralVector u(g);
    const int nyq = g.n / 2;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            if (i == nyq || j == nyq) continue;
            const cplx iz = cplx(0.0, 1.0) * psi.c[g.idx(i, j)];
            u.c1.c[g.idx(i, j)] = -g.k(j) * iz;
            u.c2.c[g.idx(i, j)] = g.k(i) * iz;
        }
    return u;
}

double rel_drift(double coarse, double fine) {
    return std::abs(fine - coarse) / std::max(std::abs(coarse), 1e-12);
}

}  // namespace

SpectralScalar random_field(const Grid& g, std::uint64_t seed, double envelope_k0, double mean) {
    const double k_cut = g.k_min() * (g.n / 3.0);
    if (!(envelope_k0 > 0.0) || envelope_k0 >= k_cut)
        throw std::invalid_argument("random_field: envelope_k0 outside (0, cutoff)");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    SpectralScalar out(g);
    const double inv2k0 = 1.0 / (2.0 * envelope_k0 * envelope_k0);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            const int m1 = g.mode(i), m2 = g.mode(j);
            const bool canonical = m1 > 0 || (m1 == 0 && m2 > 0);
            if (!canonical || g.aliased(m1, m2)) continue;
            const double kk = g.k(i) * g.k(i) + g.k(j) * g.k(j);
            const double std_k = std::exp(-kk * inv2k0);
            const double a = normal(rng), b = normal(rng);
            const cplx c = std_k * cplx(a, b) / std::sqrt(2.0);
            out.c[g.idx(i, j)] = c;
            const int ic = (g.n - i) % g.n, jc = (g.n - j) % g.n;
            out.c[g.idx(ic, jc)] = std::conj(c);
        }
    out.c[0] = mean;
    return out;
}

double check_cordoba(const SpectralScalar& q) {
    const Grid& g = q.grid;
    SpectralScalar lam = fractional_laplacian(q, 1.0);
    PhysicalScalar qp = inverse(q);
    PhysicalScalar lp = inverse(lam);
    PhysicalScalar q3(g), q2(g);
    for (std::size_t i = 0; i < qp.v.size(); ++i) {
        q2.v[i] = qp.v[i] * qp.v[i];
        q3.v[i] = q2.v[i] * qp.v[i];
    }
    const double lhs = quadrature_inner(q3, lp);
    SpectralScalar q2h = forward(q2);
    dealias_inplace(q2h);
    const double rhs_norm = norm_hs(q2h, 0.5);
    return lhs - 0.5 * rhs_norm * rhs_norm;
}

double check_weight_commutator(const SpectralScalar& q) {
    const Grid& g = q.grid;
    if (!is_mean_free(q)) throw std::invalid_argument("check_weight_commutator: q must be mean-free");
    PhysicalScalar qp = inverse(q);
    if (central_half_leak(qp) > 0.01)
        throw std::invalid_argument("check_weight_commutator: q not supported in central half");
    PhysicalScalar lq = inverse(fractional_laplacian(q, 1.0));
    PhysicalScalar aq(g);
    PhysicalScalar weight(g);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            const double x1 = g.x(i), x2 = g.x(j);
            weight.v[g.idx(i, j)] = std::sqrt(1.0 + x1 * x1 + x2 * x2);
            aq.v[g.idx(i, j)] = weight.v[g.idx(i, j)] * qp.v[g.idx(i, j)];
        }
    PhysicalScalar laq = inverse(fractional_laplacian(forward(aq), 1.0));
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < qp.v.size(); ++i) {
        const double d = weight.v[i] * lq.v[i] - laq.v[i];
        num += d * d;
        den += qp.v[i] * qp.v[i];
    }
    return den > 0.0 ? std::sqrt(num / den) : 0.0;
}

double check_halfinv_commutator(const SpectralVector& u, const SpectralScalar& q) {
    const Grid& g = q.grid;
    if (u.grid() != g) throw std::invalid_argument("check_halfinv_commutator: grid mismatch");
    if (divergence_rel(u) > 1e-10)
        throw std::invalid_argument("check_halfinv_commutator: u must be divergence-free");
    if (!is_mean_free(q)) throw std::invalid_argument("check_halfinv_commutator: q must be mean-free");

    PhysicalScalar u1 = inverse(u.c1), u2 = inverse(u.c2);
    auto advect = [&](const SpectralScalar& f) {
        SpectralVector gf = gradient(f);
        PhysicalScalar g1 = inverse(gf.c1), g2 = inverse(gf.c2);
        PhysicalScalar w(g);
        for (std::size_t i = 0; i < w.v.size(); ++i)
            w.v[i] = u1.v[i] * g1.v[i] + u2.v[i] * g2.v[i];
        SpectralScalar wh = forward(w);
        dealias_inplace(wh);
        wh.c[0] = 0.0;
        return wh;
    };

    SpectralScalar a = fractional_laplacian(advect(q), -0.5);
    SpectralScalar b = advect(fractional_laplacian(q, -0.5));
    double s = 0.0;
    for (std::size_t i = 0; i < a.c.size(); ++i) s += std::norm(a.c[i] - b.c[i]);
    const double comm = 2.0 * g.half_period * std::sqrt(s);
    const double den = h2_norm(u) * norm_l2(q);
    return den > 0.0 ? comm / den : 0.0;
}

SpectralVector force_spectrum(const SpectralScalar& q) {
    const Grid& g = q.grid;
    SpectralVector r = riesz(q);
    PhysicalScalar qp = inverse(q);
    PhysicalScalar r1 = inverse(r.c1), r2 = inverse(r.c2);
    PhysicalScalar f1(g), f2(g);
    for (std::size_t i = 0; i < qp.v.size(); ++i) {
        f1.v[i] = qp.v[i] * r1.v[i];
        f2.v[i] = qp.v[i] * r2.v[i];
    }
    SpectralVector f(forward(f1), forward(f2));
    dealias_inplace(f);
    return leray_project(f);
}

double check_force_lowmode(const SpectralScalar& q, const ProbeModes& modes) {
    const Grid& g = q.grid;
    check_probe_modes(g, modes);
    MomentResult mom = moment(q);
    if (!mom.support_ok)
        throw std::invalid_argument("check_force_lowmode: q not supported in central half");
    SpectralVector f = force_spectrum(q);
    const double box = (2.0 * g.half_period) * (2.0 * g.half_period);
    const double den = norm_l2(q) * mom.value;
    double worst = 0.0;
    for (const auto& m : modes) {
        const double kn = g.k_min() * std::sqrt(double(m[0]) * m[0] + double(m[1]) * m[1]);
        const int i = (m[0] % g.n + g.n) % g.n;
        const int j = (m[1] % g.n + g.n) % g.n;
        const double mag =
            std::sqrt(std::norm(f.c1.c[g.idx(i, j)]) + std::norm(f.c2.c[g.idx(i, j)]));
        worst = std::max(worst, mag * box / (kn * den));
    }
    return worst;
}

std::vector<CheckReport> operator_identity_suite(std::uint64_t seed, int n, double half_period,
                                                 int trials) {
    if (trials < 1) throw std::invalid_argument("operator_identity_suite: trials must be >= 1");
    Grid g(n, half_period);
    const double k0 = 0.5 * g.k_min() * (n / 3.0);
    const double box = (2.0 * half_period) * (2.0 * half_period);

    double w_round = 0.0, w_parseval = 0.0, w_riesz = 0.0;
    double w_div = 0.0, w_idem = 0.0, w_poisson = 0.0, w_heat = 0.0;

    for (int t = 0; t < trials; ++t) {
        const std::uint64_t s = seed + 7919u * std::uint64_t(t);
        const double mean = 0.1 * double(t % 7 - 3);

        // Transform round trip and Parseval on a generic field.
        SpectralScalar f = random_field(g, s, k0, mean);
        PhysicalScalar fp = inverse(f);
        SpectralScalar f2 = forward(fp);
        double dnum = 0.0, dden = 0.0, phys2 = 0.0, spec2 = 0.0;
        for (std::size_t i = 0; i < f.c.size(); ++i) {
            dnum += std::norm(f2.c[i] - f.c[i]);
            dden += std::norm(f.c[i]);
            spec2 += std::norm(f.c[i]);
        }
        const double h = g.spacing();
        for (double v : fp.v) phys2 += v * v;
        phys2 *= h * h;
        spec2 *= box;
        w_round = std::max(w_round, std::sqrt(dnum / dden));
        w_parseval = std::max(w_parseval, std::abs(std::sqrt(phys2) - std::sqrt(spec2)) /
                                              std::sqrt(spec2));

        // Riesz antisymmetry through physical-space quadrature.
        SpectralScalar f0 = random_field(g, s + 1, k0, 0.0);
        SpectralVector rf = riesz(f0);
        PhysicalScalar f0p = inverse(f0);
        PhysicalScalar r1p = inverse(rf.c1), r2p = inverse(rf.c2);
        const double nf2 = quadrature_inner(f0p, f0p);
        w_riesz = std::max(w_riesz, std::abs(quadrature_inner(f0p, r1p)) / nf2);
        w_riesz = std::max(w_riesz, std::abs(quadrature_inner(f0p, r2p)) / nf2);

        // Leray projection: solenoidal output, projection idempotent.
        SpectralVector v(random_field(g, s + 2, k0, 0.0), random_field(g, s + 3, k0, 0.0));
        SpectralVector pv = leray_project(v);
        w_div = std::max(w_div, divergence_rel(pv));
        SpectralVector ppv = leray_project(pv);
        double inum = 0.0, iden = 0.0;
        for (std::size_t i = 0; i < pv.c1.c.size(); ++i) {
            inum += std::norm(ppv.c1.c[i] - pv.c1.c[i]) + std::norm(ppv.c2.c[i] - pv.c2.c[i]);
            iden += std::norm(pv.c1.c[i]) + std::norm(pv.c2.c[i]);
        }
        w_idem = std::max(w_idem, std::sqrt(inum / iden));

        // Semigroup composition law for both evolution families.
        const double ts = 0.2 + 0.005 * t, tt = 0.7 + 0.003 * t;
        auto rel_err = [&](const SpectralScalar& x, const SpectralScalar& y) {
            double nn = 0.0, dd = 0.0;
            for (std::size_t i = 0; i < x.c.size(); ++i) {
                nn += std::norm(x.c[i] - y.c[i]);
                dd += std::norm(y.c[i]);
            }
            return std::sqrt(nn / dd);
        };
        w_poisson = std::max(
            w_poisson, rel_err(poisson_evolve(poisson_evolve(f, ts), tt), poisson_evolve(f, ts + tt)));
        SpectralVector vf(f, random_field(g, s + 4, k0, 0.0));
        w_heat = std::max(w_heat, rel_err(heat_evolve(heat_evolve(vf, ts), tt).c1,
                                          heat_evolve(vf, ts + tt).c1));
        w_heat = std::max(w_heat, rel_err(heat_evolve(heat_evolve(vf, ts), tt).c2,
                                          heat_evolve(vf, ts + tt).c2));
    }

    auto mk = [&](const char* name, double worst, double tol) {
        CheckReport r;
        r.name = name;
        r.n_trials = trials;
        r.worst = worst;
        r.seed = seed;
        r.n = n;
        r.half_period = half_period;
        r.pass = std::isfinite(worst) && worst <= tol;
        return r;
    };
    return {
        mk("transform_roundtrip", w_round, 1e-12), mk("parseval", w_parseval, 1e-12),
        mk("riesz_antisymmetry", w_riesz, 1e-12),  mk("leray_divergence", w_div, 1e-12),
        mk("leray_idempotence", w_idem, 1e-12),    mk("semigroup_poisson", w_poisson, 1e-13),
        mk("semigroup_heat", w_heat, 1e-13),
    };
}

std::vector<CheckReport> inequality_suite(std::uint64_t seed) {
    std::vector<CheckReport> out;

    {
        // Pointwise-dissipation margin over rough random fields.
        Grid g(256, kTwoPi);
        const double k0 = 0.5 * g.k_min() * (g.n / 3.0);
        const int trials = 100;
        double worst = 0.0;
        bool first = true;
        for (int t = 0; t < trials; ++t) {
            SpectralScalar q = random_field(g, seed + 13u * std::uint64_t(t), k0,
                                            0.2 * double(t % 5 - 2));
            double scale = 0.0;
            PhysicalScalar qp = inverse(q);
            const double h = g.spacing();
            for (double v : qp.v) scale += v * v * v * v;
            scale *= h * h;
            const double m = check_cordoba(q) / std::max(scale, 1e-300);
            if (first || m < worst) worst = m;
            first = false;
        }
        CheckReport r;
        r.name = "cordoba_margin";
        r.n_trials = trials;
        r.worst = worst;
        r.seed = seed;
        r.n = g.n;
        r.half_period = g.half_period;
        r.pass = std::isfinite(worst) && worst >= -1e-10;
        out.push_back(r);
    }

    {
        // Weighted commutator on localized bumps, refined from n to 2n.
        Grid g1(128, 16.0 * kPi), g2(256, 16.0 * kPi);
        const int trials = 20;
        std::mt19937_64 rng(seed ^ 0x5bd1e995u);
        std::uniform_real_distribution<double> uc(-0.25 * g1.half_period, 0.25 * g1.half_period);
        std::uniform_real_distribution<double> us(1.5, 3.0);
        std::uniform_real_distribution<double> ua(0.5, 2.0);
        double worst = 0.0, drift = 0.0;
        for (int t = 0; t < trials; ++t) {
            const double x01 = uc(rng), x02 = uc(rng), sg = us(rng);
            const double amp = ua(rng) * (t % 2 == 0 ? 1.0 : -1.0);
            SpectralScalar b1 = bump_field(g1, amp, sg, x01, x02);
            const double r1 = check_weight_commutator(b1);
            const double r2 = check_weight_commutator(zero_pad(b1, g2.n));
            worst = std::max(worst, r2);
            drift = std::max(drift, rel_drift(r1, r2));
        }
        CheckReport r;
        r.name = "weight_commutator";
        r.n_trials = trials;
        r.worst = worst;
        r.drift = drift;
        r.seed = seed;
        r.n = g2.n;
        r.half_period = g1.half_period;
        r.pass = std::isfinite(worst) && drift <= 0.20;
        out.push_back(r);
    }

    {
        // Advection commutator gain on resolved random data, refined twice.
        Grid g0(64, kTwoPi), g1(128, kTwoPi), g2(256, kTwoPi);
        const double k0 = 0.5 * g0.k_min() * (g0.n / 3.0);
        const int trials = 100;
        double worst = 0.0, drift = 0.0;
        for (int t = 0; t < trials; ++t) {
            const std::uint64_t s = seed + 101u * std::uint64_t(t);
            SpectralScalar psi = random_field(g0, s, k0, 0.0);
            SpectralScalar q0 = random_field(g0, s + 1, k0, 0.0);
            SpectralVector u0 = rot_grad(psi);
            SpectralVector u1 = zero_pad(u0, g1.n);
            SpectralScalar q1 = zero_pad(q0, g1.n);
            SpectralVector u2 = zero_pad(u0, g2.n);
            SpectralScalar q2 = zero_pad(q0, g2.n);
            const double r1 = check_halfinv_commutator(u1, q1);
            const double r2 = check_halfinv_commutator(u2, q2);
            worst = std::max(worst, r2);
            drift = std::max(drift, rel_drift(r1, r2));
        }
        CheckReport r;
        r.name = "halfinv_commutator";
        r.n_trials = trials;
        r.worst = worst;
        r.drift = drift;
        r.seed = seed;
        r.n = g2.n;
        r.half_period = g0.half_period;
        r.pass = std::isfinite(worst) && drift <= 0.20;
        out.push_back(r);
    }

    {
        // Low-mode force constant, refined from n to 2n. A single radial bump
        // would be vacuous (q R q is then a pure gradient and P annihilates
        // it), so each trial superposes two offset bumps.
        Grid g1(128, 16.0 * kPi), g2(256, 16.0 * kPi);
        const int trials = 20;
        std::mt19937_64 rng(seed ^ 0xc2b2ae35u);
        std::uniform_real_distribution<double> uc(-0.25 * g1.half_period, 0.25 * g1.half_period);
        std::uniform_real_distribution<double> us(1.5, 3.0);
        std::uniform_real_distribution<double> ua(0.5, 2.0);
        const ProbeModes modes = {{1, 0}, {0, 1}, {1, 1}, {-1, 1}, {2, 0}, {0, 2}};
        double worst = 0.0, drift = 0.0;
        for (int t = 0; t < trials; ++t) {
            SpectralScalar b1 = bump_field(g1, ua(rng) * (t % 2 == 0 ? 1.0 : -1.0), us(rng),
                                           uc(rng), uc(rng));
            SpectralScalar b2 = bump_field(g1, ua(rng), us(rng), uc(rng), uc(rng));
            for (std::size_t i = 0; i < b1.c.size(); ++i) b1.c[i] += b2.c[i];
            const double r1 = check_force_lowmode(b1, modes);
            const double r2 = check_force_lowmode(zero_pad(b1, g2.n), modes);
            worst = std::max(worst, r2);
            drift = std::max(drift, rel_drift(r1, r2));
        }
        CheckReport r;
        r.name = "force_lowmode";
        r.n_trials = trials;
        r.worst = worst;
        r.drift = drift;
        r.seed = seed;
        r.n = g2.n;
        r.half_period = g1.half_period;
        r.pass = std::isfinite(worst) && drift <= 0.20;
        out.push_back(r);
    }

    return out;
}

}  // namespace ecsim
