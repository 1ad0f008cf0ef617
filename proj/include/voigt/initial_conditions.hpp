#pragma once

#include "voigt/field.hpp"

namespace voigt {

/// Taylor-Green vortex. 2D: u = (sin 2pi x cos 2pi y, -cos 2pi x sin 2pi y),
/// a steady Euler (and Voigt) solution. 3D: the classical vortex
/// u = (sin cos cos, -cos sin cos, 0) with 2pi arguments (not steady).
SpectralField taylor_green(const GridSpec& grid);

/// Divergence-free random field with Gevrey-class decay: Gaussian complex
/// coefficients with Hermitian symmetry, Leray-projected, enveloped by
/// e^{-tau0 2pi |k|}, supported on the 2/3 dealias ball, normalized so that
/// |u|_{L^2}^2 equals `energy`. Deterministic in `seed`.
SpectralField random_analytic(const GridSpec& grid, std::uint64_t seed, double tau0,
                              double energy);

/// Synthetic spectrum with exact per-mode vector amplitude e^{-tau0 2pi |k|}
/// on the dealias ball (for radius-estimator calibration). Solenoidal and
/// Hermitian.
SpectralField synthetic_exponential_spectrum(const GridSpec& grid, double tau0,
                                             std::uint64_t seed = 1);

}  // namespace voigt
