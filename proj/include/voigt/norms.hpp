#pragma once

#include "voigt/field.hpp"

namespace voigt {

/// Sobolev / Gevrey norm parameters.
struct NormSpec {
    double m = 0;           // Sobolev order
    double gevrey_r = 0;    // Gevrey polynomial order r
    double gevrey_tau = 0;  // analyticity-radius parameter tau
    bool seminorm = false;  // use (2pi|k|)^{2m} weight instead of (1+(2pi|k|)^2)^m
};

/// ( sum_k (1 + (2pi|k|)^2)^m |u_hat|^2 )^{1/2}.
double sobolev_norm(const SpectralField& field, double m);

/// ( sum_k (2pi|k|)^{2m} |u_hat|^2 )^{1/2}.
double sobolev_seminorm(const SpectralField& field, double m);

struct GevreyNorm {
    double value = 0;
    bool saturated = false;  // some per-mode exponent hit the overflow clamp
};

/// ( sum_k (2pi|k|)^{2r} e^{2 tau 2pi|k|} |u_hat|^2 )^{1/2}, i.e.
/// |A^{r/2} e^{tau A^{1/2}} u|_{L^2}. Evaluated in log space per mode with
/// the exponent clamped; a clamped mode sets the saturated flag.
GevreyNorm gevrey_norm(const SpectralField& field, double r, double tau);

}  // namespace voigt
