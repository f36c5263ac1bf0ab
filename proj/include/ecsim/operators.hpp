#pragma once

#include "ecsim/field.hpp"

namespace ecsim {

// Fourier-multiplier operators. All pure; inputs are untouched.
//
// Symbols acting on the mode k = (pi/L) m:
//   fractional_laplacian  |k|^alpha   ((0,0) set to 0 for alpha != 0)
//   riesz                 i k_j / |k| ((0,0) annihilated)
//   leray_project         I - k k^T / |k|^2 ((0,0) passed through)
//   gradient/divergence   i k_j
// Odd symbols are zeroed on the Nyquist lines m = -n/2: those modes have no +n/2
// partner, so an odd multiplier there would break the conjugate symmetry of real
// fields. Dealiased workloads never populate them.

// alpha in [-2, 4]; alpha < 0 requires a mean-free input (|c0| <= 1e-14 relative).
SpectralScalar fractional_laplacian(const SpectralScalar& f, double alpha);

// Requires mean-free input; the (0,0) mode of the source is tracked by the caller.
SpectralVector riesz(const SpectralScalar& f);

SpectralVector leray_project(const SpectralVector& v);
SpectralVector gradient(const SpectralScalar& f);
SpectralScalar divergence(const SpectralVector& v);

// 2/3 rule: zero all coefficients with 3*max(|m1|,|m2|) > n.
SpectralScalar dealias(const SpectralScalar& f);
SpectralVector dealias(const SpectralVector& v);
void dealias_inplace(SpectralScalar& f);
void dealias_inplace(SpectralVector& v);

// Norms. L2 and Hs are spectral (Parseval); L4, Linf go through collocation values.
// Vector fields use the pointwise Euclidean magnitude (Frobenius for gradients).
double norm_l2(const SpectralScalar& f);
double norm_l2(const SpectralVector& v);
double norm_l4(const SpectralScalar& f);
double norm_l4(const SpectralVector& v);
double norm_linf(const SpectralScalar& f);
double norm_linf(const SpectralVector& v);
double norm_hs(const SpectralScalar& f, double s);  // ||Lambda^s f||_L2, s < 0 needs mean-free
double norm_hs(const SpectralVector& v, double s);
double norm_w14(const SpectralScalar& f);  // ||f||_L4 + ||grad f||_L4
double norm_w14(const SpectralVector& v);

// Support predicates used by preconditions across modules.
bool is_mean_free(const SpectralScalar& f, double rel_tol = 1e-14);

// Relative divergence content of a vector field: ||k.v|| / |||k||v||, 0 for v = 0.
double divergence_rel(const SpectralVector& v);

// Fraction of spectral energy beyond the 2/3 cutoff (resolution / aliasing indicator).
double tail_fraction(const SpectralScalar& f);
double tail_fraction(const SpectralVector& v);

// Embed coefficients into a finer grid with the same half-period (exact resampling
// of the represented trigonometric polynomial; n_new >= n).
SpectralScalar zero_pad(const SpectralScalar& f, int n_new);
SpectralVector zero_pad(const SpectralVector& v, int n_new);

}  // namespace ecsim
