#pragma once

#include "ecsim/field.hpp"

namespace ecsim {

// Spectral state of the coupled system: charge density q and divergence-free
// velocity u. The spatial mean of q is a conserved quantity of the flow.
struct SimState {
    double t = 0.0;
    SpectralScalar q_hat;
    SpectralVector u_hat;

    SimState() = default;
    SimState(double t_, SpectralScalar q, SpectralVector u)
        : t(t_), q_hat(std::move(q)), u_hat(std::move(u)) {}
};

// Nonlinear slopes with the stiff linear parts left out (the integrator applies
// those exactly):
//   rhs_q = -dealias(div(u q))                   [advection in divergence form]
//   rhs_u = -P dealias((u.grad)u) - P dealias(q R q)
// Products are formed at collocation points; the Riesz factor uses the mean-free
// part of q. Velocity with relative divergence above 1e-10 is rejected.
SpectralScalar rhs_q(const SimState& s);
SpectralVector rhs_u(const SimState& s);

// Both slopes from one pass (shares the transforms of q and u).
void eval_rhs(const SimState& s, SpectralScalar& out_q, SpectralVector& out_u);

// E = 0.5 ||Lambda^{-1/2} q'||^2 + 0.5 ||u||^2 and D = ||q'||^2 + ||grad u||^2,
// with q' the mean-free part of q (the mean mode carries no dissipation on the
// torus, so the energy identity holds for the fluctuation only).
double energy(const SimState& s);
double dissipation(const SimState& s);

// | [E(b) - E(a)] / (t_b - t_a) + (D(a) + D(b)) / 2 |, the discrete residual of
// d/dt E + D = 0. Requires t_b > t_a.
double energy_residual(const SimState& a, const SimState& b);

}  // namespace ecsim
