#include "ecsim/rhs.hpp"

#include <cmath>
#include <stdexcept>

#include "ecsim/fft.hpp"
#include "ecsim/operators.hpp"

namespace ecsim {
namespace {

void check_state(const SimState& s) {
    if (!(s.q_hat.grid == s.u_hat.grid()))
        throw std::invalid_argument("rhs: q and u live on different grids");
    if (divergence_rel(s.u_hat) > 1e-10)
        throw std::invalid_argument("rhs: velocity is not divergence-free");
}

SpectralScalar advection_q(const SimState& s, const PhysicalVector& u, const PhysicalScalar& q) {
    const Grid& g = s.q_hat.grid;
    PhysicalVector uq(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        uq.v1.v[i] = u.v1.v[i] * q.v[i];
        uq.v2.v[i] = u.v2.v[i] * q.v[i];
    }
    SpectralScalar out = divergence(forward(uq));
    dealias_inplace(out);
    for (cplx& z : out.c) z = -z;
    out.c[0] = cplx(0.0, 0.0);  // divergence form: exactly mean-free
    return out;
}

SpectralVector momentum_rhs(const SimState& s, const PhysicalVector& u, const PhysicalScalar& q) {
    const Grid& g = s.q_hat.grid;

    PhysicalVector g1 = inverse(gradient(s.u_hat.c1));
    PhysicalVector g2 = inverse(gradient(s.u_hat.c2));
    PhysicalVector adv(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        adv.v1.v[i] = u.v1.v[i] * g1.v1.v[i] + u.v2.v[i] * g1.v2.v[i];
        adv.v2.v[i] = u.v1.v[i] * g2.v1.v[i] + u.v2.v[i] * g2.v2.v[i];
    }
    SpectralVector adv_hat = forward(adv);
    dealias_inplace(adv_hat);
    adv_hat = leray_project(adv_hat);

    SpectralScalar q_fluct = s.q_hat;
    q_fluct.c[0] = cplx(0.0, 0.0);
    PhysicalVector rq = inverse(riesz(q_fluct));
    PhysicalVector force(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        force.v1.v[i] = q.v[i] * rq.v1.v[i];
        force.v2.v[i] = q.v[i] * rq.v2.v[i];
    }
    SpectralVector force_hat = forward(force);
    dealias_inplace(force_hat);
    force_hat = leray_project(force_hat);

    SpectralVector out(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        out.c1.c[i] = -adv_hat.c1.c[i] - force_hat.c1.c[i];
        out.c2.c[i] = -adv_hat.c2.c[i] - force_hat.c2.c[i];
    }
    return out;
}

}  // namespace

void eval_rhs(const SimState& s, SpectralScalar& out_q, SpectralVector& out_u) {
    check_state(s);
    PhysicalVector u = inverse(s.u_hat);
    PhysicalScalar q = inverse(s.q_hat);
    out_q = advection_q(s, u, q);
    out_u = momentum_rhs(s, u, q);
}

SpectralScalar rhs_q(const SimState& s) {
    check_state(s);
    PhysicalVector u = inverse(s.u_hat);
    PhysicalScalar q = inverse(s.q_hat);
    return advection_q(s, u, q);
}

SpectralVector rhs_u(const SimState& s) {
    check_state(s);
    PhysicalVector u = inverse(s.u_hat);
    PhysicalScalar q = inverse(s.q_hat);
    return momentum_rhs(s, u, q);
}

double energy(const SimState& s) {
    const Grid& g = s.q_hat.grid;
    double eq = 0.0, eu = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const double k1 = g.k(i);
        for (int j = 0; j < g.n; ++j) {
            const double k2 = g.k(j);
            const std::size_t idx = g.idx(i, j);
            const double kn = std::sqrt(k1 * k1 + k2 * k2);
            if (kn > 0.0) eq += std::norm(s.q_hat.c[idx]) / kn;
            eu += std::norm(s.u_hat.c1.c[idx]) + std::norm(s.u_hat.c2.c[idx]);
        }
    }
    const double box = 4.0 * g.half_period * g.half_period;
    return 0.5 * box * (eq + eu);
}

double dissipation(const SimState& s) {
    const Grid& g = s.q_hat.grid;
    double dq = 0.0, du = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const double k1 = g.k(i);
        for (int j = 0; j < g.n; ++j) {
            const double k2 = g.k(j);
            const std::size_t idx = g.idx(i, j);
            const double kk = k1 * k1 + k2 * k2;
            if (kk > 0.0) dq += std::norm(s.q_hat.c[idx]);
            du += kk * (std::norm(s.u_hat.c1.c[idx]) + std::norm(s.u_hat.c2.c[idx]));
        }
    }
    const double box = 4.0 * g.half_period * g.half_period;
    return box * (dq + du);
}

double energy_residual(const SimState& a, const SimState& b) {
    if (!(b.t > a.t)) throw std::invalid_argument("energy_residual: requires t_b > t_a");
    const double dE = (energy(b) - energy(a)) / (b.t - a.t);
    const double D = 0.5 * (dissipation(a) + dissipation(b));
    return std::fabs(dE + D);
}

}  // namespace ecsim
