#pragma once

#include "ecsim/field.hpp"

namespace ecsim {

// Forward: c(m) = (1/n^2) sum_j f(x_j) exp(-i k_m . x_j).  Inverse is its exact inverse.
// Throws std::invalid_argument on non-finite input values.
SpectralScalar forward(const PhysicalScalar& f);
PhysicalScalar inverse(const SpectralScalar& f);
SpectralVector forward(const PhysicalVector& f);
PhysicalVector inverse(const SpectralVector& f);

}  // namespace ecsim
