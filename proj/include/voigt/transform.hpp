#pragma once

#include "voigt/field.hpp"

namespace voigt {

/// Inverse transform: u(x_j) = sum_k u_hat_k e^{2*pi*i k.x_j}.
/// The field must be Hermitian-symmetric (real-valued in physical space);
/// the imaginary residue is discarded.
PhysicalField to_physical(const SpectralField& field);

/// Forward transform: u_hat_k = (1/n^dim) sum_j u(x_j) e^{-2*pi*i k.x_j}.
/// Exact inverse of to_physical on band-limited data.
SpectralField to_spectral(const PhysicalField& samples);

}  // namespace voigt
