#pragma once

#include <optional>
#include <utility>

#include "voigt/operators.hpp"

namespace voigt {

/// Regularization lengths for the velocity and magnetic equations.
struct VoigtParams {
    double alpha = 0;    // alpha = 0 selects the unregularized Euler RHS
    double alpha_m = 0;

    void validate() const {
        if (!(alpha >= 0) || !std::isfinite(alpha))
            throw ConfigError("alpha must be finite and >= 0");
        if (!(alpha_m >= 0) || !std::isfinite(alpha_m))
            throw ConfigError("alpha_m must be finite and >= 0");
    }
};

enum class RhsKind { euler, voigt, mhd_voigt };

struct SimState {
    double time = 0;
    SpectralField u;
    std::optional<SpectralField> b;  // magnetic field, MHD only
};

/// Projected advection term B(w1, w2) = P_sigma((w1 . grad) w2), evaluated
/// pseudo-spectrally with 2/3-rule dealiasing so it equals the sharp
/// Galerkin convolution on the retained modes. w1 must be solenoidal.
SpectralField bilinear_term(const SpectralField& w1, const SpectralField& w2);

/// B(u, u). Throws ContractViolation if u is visibly non-solenoidal.
SpectralField nonlinear_term(const SpectralField& u);

/// du/dt = -B(u,u).
SpectralField rhs_euler(const SimState& state);

/// du/dt = -(I + alpha^2 A)^{-1} B(u,u); alpha = 0 reduces to rhs_euler.
SpectralField rhs_voigt(const SimState& state, const VoigtParams& params);

/// du/dt = (I+alpha^2 A)^{-1}[B(b,b) - B(u,u)],
/// db/dt = (I+alpha_m^2 A)^{-1}[B(b,u) - B(u,b)].
std::pair<SpectralField, SpectralField> rhs_mhd_voigt(const SimState& state,
                                                      const VoigtParams& params);

struct PressureFields {
    SpectralField p;                 // scalar, mean-zero
    std::optional<SpectralField> q;  // magnetic pressure (MHD only)
};

/// Recovers the eliminated pressure(s): -lap p = div((u.grad)u - (b.grad)b
/// + 1/2 grad|b|^2), and -lap q = div((u.grad)b - (b.grad)u) for MHD
/// (grad q vanishes identically for solenoidal fields).
PressureFields recover_pressure(const SimState& state, const VoigtParams& params);

/// Sharp spectral-ball truncation |k| <= n_prime of all fields.
SimState galerkin_truncate(const SimState& state, int n_prime);

}  // namespace voigt
