#pragma once

#include "ecsim/field.hpp"

namespace ecsim {

// Linear comparison flows, exact per mode:
//   poisson_evolve: multiplier exp(-|k| t)    (half-Laplacian semigroup)
//   heat_evolve:    multiplier exp(-|k|^2 t)  (heat semigroup)
// Both require t >= 0 and satisfy the semigroup law to round-off.
SpectralScalar poisson_evolve(const SpectralScalar& q0, double t);
SpectralVector heat_evolve(const SpectralVector& u0, double t);

// Max over collocation points of |grad field| (Euclidean; Frobenius for the
// vector overload). Warns on stderr when the spectral tail beyond the 2/3
// cutoff exceeds 1e-10 of the total energy (unresolved field).
double grad_sup(const SpectralScalar& f);
double grad_sup(const SpectralVector& v);

}  // namespace ecsim
