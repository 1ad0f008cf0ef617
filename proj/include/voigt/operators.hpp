#pragma once

#include <vector>

#include "voigt/field.hpp"

namespace voigt {

/// Dealiasing / Galerkin truncation rule.
struct TruncationRule {
    enum class Kind { two_thirds, sharp_radius };
    Kind kind = Kind::two_thirds;
    int radius = 0;  // used by sharp_radius only

    static TruncationRule two_thirds() { return {Kind::two_thirds, 0}; }
    static TruncationRule sharp(int radius) { return {Kind::sharp_radius, radius}; }
};

/// Leray-Helmholtz projection: per mode u_hat -= k (k.u_hat)/|k|^2, k=0
/// component zeroed. Idempotent, self-adjoint, kills gradients.
SpectralField leray_project(const SpectralField& field);

/// (I + alpha^2 A)^{-1}: scales each mode by 1/(1 + alpha^2 4pi^2 |k|^2).
SpectralField helmholtz_inverse(const SpectralField& field, double alpha);

/// d/dx_axis: per-mode multiplication by 2*pi*i*k_axis.
SpectralField partial_derivative(const SpectralField& field, int axis);

/// All partial derivatives; result[j] = d(field)/dx_j.
std::vector<SpectralField> gradient(const SpectralField& field);

/// div u = sum_j d(u_j)/dx_j; one-component result.
SpectralField divergence(const SpectralField& field);

/// Per-mode multiplication by -(2pi|k|)^2.
SpectralField laplacian(const SpectralField& field);

SpectralField dealias_truncate(const SpectralField& field, TruncationRule rule);

/// Relative divergence defect |div u|_{L^2} / (2pi |u|_{H^1 seminorm-ish});
/// zero field reports 0.
double solenoidal_defect(const SpectralField& field);

/// Zero-padded embedding onto a finer grid (new_n >= n); coefficients are
/// copied by wavevector.
SpectralField spectral_prolong(const SpectralField& field, int new_n);

}  // namespace voigt
