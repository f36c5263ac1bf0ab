#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ecsim/diagnostics.hpp"
#include "ecsim/field.hpp"

namespace ecsim {

struct CheckReport {
    std::string name;
    int n_trials = 0;
    double worst = 0.0;  // min margin for inequality checks, max ratio/error otherwise
    double drift = 0.0;  // relative change under grid refinement (0 when not measured)
    std::uint64_t seed = 0;
    int n = 0;
    double half_period = 0.0;
    bool pass = false;
};

// Band-limited real Gaussian field: coefficient std proportional to
// exp(-|k|^2/(2 k0^2)), hard-truncated at the 2/3 cutoff, prescribed mean,
// deterministic per seed. Requires k0 below the cutoff wavenumber.
SpectralScalar random_field(const Grid& g, std::uint64_t seed, double envelope_k0, double mean);

// Margin of the pointwise-dissipation inequality for the half-Laplacian:
//   integral(q^3 Lambda q) - 0.5 || Lambda^{1/2}(q^2) ||^2   (>= 0 in theory).
// The square is dealiased before the half-derivative norm.
double check_cordoba(const SpectralScalar& q);

// || a Lambda q - Lambda(a q) || / ||q|| with weight a(x) = sqrt(1 + |x|^2) in
// minimal-image coordinates. Requires mean-free q supported in the central half.
double check_weight_commutator(const SpectralScalar& q);

// || Lambda^{-1/2}(u.grad q) - u.grad Lambda^{-1/2} q || / (||u||_H2 ||q||)
// with the inhomogeneous H2 norm (sum (1+|k|^2)^2 |u_hat|^2 (2L)^2)^(1/2).
// Requires divergence-free u and mean-free q.
double check_halfinv_commutator(const SpectralVector& u, const SpectralScalar& q);

// Projected electric force spectrum P(q R q) of a mean-free q.
SpectralVector force_spectrum(const SpectralScalar& q);

// max over modes of |coeff(P(q R q))| (2L)^2 / (|k| ||q|| M(q)): the measured
// constant of the low-mode force bound. Requires mean-free q with moment-valid
// support and nonzero modes.
double check_force_lowmode(const SpectralScalar& q, const ProbeModes& modes);

// Identity suite: Riesz antisymmetry, Leray divergence/idempotence, Parseval,
// and the two semigroup laws on seeded random fields.
std::vector<CheckReport> operator_identity_suite(std::uint64_t seed, int n, double half_period,
                                                 int trials);

// Inequality suite: Cordoba margin sweep, weighted commutator + advection
// commutator + force-bound ratios with refinement drift under n doubling.
std::vector<CheckReport> inequality_suite(std::uint64_t seed);

}  // namespace ecsim
