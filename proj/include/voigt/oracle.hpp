#pragma once

#include "voigt/dynamics.hpp"
#include "voigt/norms.hpp"

namespace voigt {
/// Brute-force reference implementations for validating the fast paths on
/// tiny grids. Quarantined behind size guards; never used in production runs.
namespace oracle {

/// Explicit sparse mode list; Hermitian-paired, no duplicate wavevectors.
struct DenseModeSet {
    GridSpec grid;
    struct Mode {
        std::array<int, 3> k;
        std::array<std::complex<double>, 3> coeff;  // unused components zero
    };
    std::vector<Mode> modes;

    static DenseModeSet from_field(const SpectralField& field);
    SpectralField to_field(int components) const;
};

/// Direct O(M^2) Galerkin convolution of B(u,u):
/// B_hat_k = P_sigma(k) sum_{p+q=k} (2pi i q . u_hat_p) u_hat_q,
/// inputs and outputs truncated by `rule`. Throws if more than 10^4 modes
/// are active.
SpectralField convolution_nonlinear_term(const SpectralField& u,
                                         TruncationRule rule = TruncationRule::two_thirds());

/// Central-difference residual |(u(t+h) - u(t-h))/(2h) - rhs(u(t))|_{L^2}
/// from three equispaced snapshots; O(h^2) for a true trajectory.
double fd_time_derivative(const SimState& before, const SimState& center,
                          const SimState& after, double h, const VoigtParams& params,
                          RhsKind kind);

/// Naive per-mode summation reference for the Sobolev / Gevrey norms.
double direct_norm_sums(const SpectralField& field, const NormSpec& spec);

}  // namespace oracle
}  // namespace voigt
