#pragma once

#include <functional>
#include <optional>

#include "voigt/diagnostics.hpp"

namespace voigt {

struct IntegratorConfig {
    enum class Method { rk4, rk2 };
    Method method = Method::rk4;
    double dt = 1e-3;                       // negative dt integrates backward
    double t_end = 1.0;
    double energy_drift_budget = 1e-8;      // relative, per unit time
    int callback_stride = 10;               // steps between diagnostic records
    std::optional<int> galerkin_radius;     // sharp P_N applied inside the RHS
    int hm_max = 3;                         // H^m norms recorded, m = 1..hm_max

    void validate(double t_start) const {
        if (dt == 0 || !std::isfinite(dt)) throw ConfigError("dt must be nonzero and finite");
        if ((t_end - t_start) * dt < 0)
            throw ConfigError("sign(dt) must match sign(t_end - t_start)");
        if (callback_stride < 1) throw ConfigError("callback_stride must be >= 1");
    }
};

/// Coefficients became NaN/Inf; carries the last finite state.
struct BlowupDetected : std::runtime_error {
    SimState last_state;
    explicit BlowupDetected(SimState s)
        : std::runtime_error("non-finite coefficients detected at t = " +
                             std::to_string(s.time)),
          last_state(std::move(s)) {}
};

/// Conserved-quantity drift exceeded the budget (dt too large, not physics).
struct DriftBudgetExceeded : std::runtime_error {
    SimState last_state;
    double drift;
    DriftBudgetExceeded(SimState s, double d)
        : std::runtime_error("energy drift " + std::to_string(d) +
                             " exceeded budget at t = " + std::to_string(s.time)),
          last_state(std::move(s)),
          drift(d) {}
};

/// One explicit Runge-Kutta step; solenoidality is re-imposed afterwards.
SimState step(const SimState& state, const VoigtParams& params, RhsKind kind, double dt,
              IntegratorConfig::Method method = IntegratorConfig::Method::rk4,
              std::optional<int> galerkin_radius = {});

using DiagnosticsSink = std::function<void(const DiagnosticsRecord&)>;

/// Fixed-step integration to config.t_end. Emits a record at t_start, every
/// callback_stride steps, and at the final time. Aborts with
/// DriftBudgetExceeded or BlowupDetected on trouble.
SimState integrate(SimState state, const VoigtParams& params, RhsKind kind,
                   const IntegratorConfig& config, const DiagnosticsSink& sink = {});

/// Forward to t_end and back; returns |u_ret - u_0|_{L^2} / |u_0|_{L^2}.
double reversibility_check(const SimState& state, const VoigtParams& params, RhsKind kind,
                           const IntegratorConfig& config);

}  // namespace voigt
