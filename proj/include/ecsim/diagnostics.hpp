#pragma once

#include <array>
#include <utility>
#include <vector>

#include "ecsim/rhs.hpp"

namespace ecsim {

// One sampling instant. Squared norms unless stated otherwise; moment and w14u
// are plain norms. diffq2/diffu2 compare against the linear comparison flows,
// shell_* split ||q||^2 at the Fourier-splitting radius rho(t) = r/(2(1+t)),
// probe_* are max over the probe mode set of |coeff| (2L)^2 / |k| for the
// differences zeta = q - Q and v = u - U.
struct TimeSeriesRecord {
    double t = 0.0;
    double l2q2 = 0.0, l2u2 = 0.0, l4q4 = 0.0;
    double h1q2 = 0.0, h1u2 = 0.0, h2q2 = 0.0, h2u2 = 0.0;
    double w14u = 0.0;
    double moment = 0.0;
    double mean_q = 0.0;
    double diffq2 = 0.0, diffu2 = 0.0;
    double shell_low_q = 0.0, shell_high_q = 0.0;
    double probe_zeta_max = 0.0, probe_v_max = 0.0;
};

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double t_lo = 0.0, t_hi = 0.0;
    int n_samples = 0;
    double rms_residual = 0.0;
};

struct MomentResult {
    double value = 0.0;
    bool support_ok = true;  // tail mass outside the central half below 1% of ||q||^2
};

using ProbeModes = std::vector<std::array<int, 2>>;

TimeSeriesRecord record(const SimState& s, const SpectralScalar& Q_hat,
                        const SpectralVector& U_hat, const ProbeModes& probe_modes,
                        double splitting_r);

// M = || sqrt(1 + |x|^2) q ||_L2 by collocation quadrature with minimal-image
// coordinates. Always >= ||q||_L2.
MomentResult moment(const SpectralScalar& q_hat);

// Least-squares slope of ln y against ln(1+t) over t in [t_lo, t_hi].
// Requires t_lo >= 1, at least 20 samples in the window, and y > 0 there.
FitResult fit_exponent(const std::vector<std::pair<double, double>>& series, double t_lo,
                       double t_hi);

// sup over samples in [t_lo, t_hi] of (1+t)^p y(t).
double sup_constant(const std::vector<std::pair<double, double>>& series, double p, double t_lo,
                    double t_hi);

// Throws std::invalid_argument on the zero mode or modes outside the resolved
// (dealiased) band.
void check_probe_modes(const Grid& g, const ProbeModes& modes);

// Normalized low-mode amplitudes |coeff(m)| (2L)^2 / |k_m| for each probe mode;
// the vector overload uses the Euclidean magnitude of the two components.
// Modes must be nonzero and inside the resolved (dealiased) band.
std::vector<double> fourier_probe(const SpectralScalar& f, const ProbeModes& modes);
std::vector<double> fourier_probe(const SpectralVector& v, const ProbeModes& modes);

}  // namespace ecsim
