#pragma once

#include <string>
#include <vector>

#include "ecsim/config.hpp"
#include "ecsim/integrator.hpp"

namespace ecsim {

// Fully specified configs for the standing experiments:
//   S1_sharp_decay        nonzero-mass charge blob + vortex; decay exponents
//   S2_difference_decay   same flow; nonlinear-minus-linear differences
//   S3_moment_growth      same flow; weighted-moment history
//   S4_linear_oracle      Poisson-kernel charge, coupling off (exact linear flow)
//   S5_property_suite     seeded operator identity / inequality sweeps
ExperimentConfig scenario(const std::string& name);
const std::vector<std::string>& scenario_names();

// Spectral initial state (t = 0) for the config's preset, dealiased.
SimState initial_state(const ExperimentConfig& cfg);

// Sampling instants: t = 0, then log-spaced from 0.25 at per_decade points per
// decade, with t_end appended.
std::vector<double> sample_times(const ExperimentConfig& cfg);

struct RunResult {
    std::vector<TimeSeriesRecord> records;
    std::vector<double> energy;
    std::vector<double> dissipation;
    SimState final_state;
};

// Integrate a configured experiment, recording diagnostics against the linear
// comparison flows at every sample. The overload taking a start state is the
// restart path; comparisons still use the preset initial data.
RunResult run_experiment(const ExperimentConfig& cfg);
RunResult run_experiment(const ExperimentConfig& cfg, const SimState& start);

struct OrderCheck {
    std::vector<double> dts;          // coarse step sizes, halved
    double dt_ref = 0.0;
    std::vector<double> state_error;  // sup over [3,5] of state distance to reference
    std::vector<double> residual;     // sup over [3,5] of the energy-identity residual
    double state_ratio = 0.0;         // error(dt) / error(dt/2); 4 at second order
    double residual_ratio = 0.0;
};

// Convergence study on the S1 flow truncated to t = 5: state errors against a
// dt/8 reference under dt halving, and the energy-identity residual measured at
// sampling spacing proportional to dt so both contraction rates are visible.
OrderCheck run_order_check();

}  // namespace ecsim
