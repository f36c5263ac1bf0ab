#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "ecsim/rhs.hpp"

namespace ecsim {

struct IntegratorConfig {
    double dt_max = 0.05;
    double cfl = 0.4;  // in (0, 1]
    double t_end = 0.0;
    std::vector<double> sample_times;  // increasing, inside [0, t_end]
    bool linear_only = false;          // skip the nonlinear slopes (semigroup flow)
};

struct BlowupError : std::runtime_error {
    double last_good_t;
    explicit BlowupError(double t, const std::string& what)
        : std::runtime_error(what), last_good_t(t) {}
};

// Advective step limit: min(dt_max, cfl * h / max(||u||_inf, 1e-8)).
double cfl_dt(const SimState& s, const IntegratorConfig& cfg);

// One exponential-Heun step. The stiff diagonal parts are applied through the
// exact factors E1 = exp(-|k| dt) on q and E2 = exp(-|k|^2 dt) on u; the
// nonlinear slopes get the integrating-factor trapezoid:
//   predictor  y* = E (y + dt N(y))
//   corrector  y+ = E y + dt/2 (E N(y) + N(y*))
// Second order; exact when the nonlinear terms vanish.
SimState step(const SimState& s, double dt, bool linear_only = false);

// Advance to cfg.t_end, clipping dt to land exactly on each sample time and
// invoking sink there. Throws BlowupError on non-finite coefficients or on
// ||q|| growth above 1% between samples.
SimState run(SimState s, const IntegratorConfig& cfg,
             const std::function<void(const SimState&)>& sink);

}  // namespace ecsim
