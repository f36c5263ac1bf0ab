#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "ecsim/diagnostics.hpp"

namespace ecsim {

// Validated experiment description. Field defaults are the documented schema
// defaults; init_params is pre-filled from the preset registry.
struct ExperimentConfig {
    int n = 256;
    double half_period = 40.0 * kPi;
    std::string preset = "gaussian_blob_vortex";
    std::map<std::string, double> init_params;
    double dt_max = 0.05;
    double cfl = 0.4;
    double t_end = 10.0 * kPi;  // defaults to half_period / 4
    int per_decade = 32;
    double splitting_r = 4.0;
    ProbeModes probe_modes;
    std::uint64_t seed = 12345;
    std::string output_dir = "out";

    bool operator==(const ExperimentConfig&) const = default;
};

// Initial-data presets and their parameter defaults:
//   gaussian_blob_vortex  charge blob exp(-|x|^2/(2 width^2)) scaled to the given
//                         mass, velocity from the Gaussian stream function
//                         vortex_amplitude * exp(-|x|^2/(2 vortex_width^2))
//   poisson_kernel        charge coefficients exp(-scale |k|), zero velocity
// Both carry a "coupling" switch; 0 freezes the nonlinear terms so the run is
// the exact linear comparison flow.
const std::map<std::string, std::map<std::string, double>>& preset_registry();

ProbeModes default_probe_modes();

// Parse a JSON config document. Unknown keys, type mismatches, and constraint
// violations throw std::invalid_argument naming the offending key path.
// Accepted keys: grid.n, grid.half_period, init.preset, init.params.*,
// integrator.dt_max, integrator.cfl, integrator.t_end, sampling.per_decade,
// splitting.r, probes.modes, seed, output.dir. Every key is optional.
ExperimentConfig parse_config(const std::string& text);

// Inverse of parse_config up to formatting: parse(serialize(c)) == c.
std::string serialize_config(const ExperimentConfig& cfg);

ExperimentConfig load_config_file(const std::string& path);

}  // namespace ecsim
