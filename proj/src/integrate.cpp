#include "voigt/integrate.hpp"

#include <cmath>

namespace voigt {

namespace {

struct Deriv {
    SpectralField du;
    std::optional<SpectralField> db;
};

Deriv eval_rhs(const SimState& state, const VoigtParams& params, RhsKind kind,
               const std::optional<int>& galerkin_radius) {
    const SimState* s = &state;
    SimState truncated;
    if (galerkin_radius) {
        truncated = galerkin_truncate(state, *galerkin_radius);
        s = &truncated;
    }
    Deriv d;
    switch (kind) {
        case RhsKind::euler:
            d.du = rhs_euler(*s);
            break;
        case RhsKind::voigt:
            d.du = rhs_voigt(*s, params);
            break;
        case RhsKind::mhd_voigt: {
            auto [du, db] = rhs_mhd_voigt(*s, params);
            d.du = std::move(du);
            d.db = std::move(db);
            break;
        }
    }
    if (galerkin_radius) {
        d.du = dealias_truncate(d.du, TruncationRule::sharp(*galerkin_radius));
        if (d.db) d.db = dealias_truncate(*d.db, TruncationRule::sharp(*galerkin_radius));
    }
    return d;
}

SimState advanced(const SimState& s, const Deriv& d, double h) {
    SimState out = s;
    out.u.axpy(h, d.du);
    if (out.b && d.db) out.b->axpy(h, *d.db);
    return out;
}

void accumulate(Deriv& acc, const Deriv& d, double w) {
    acc.du.axpy(w, d.du);
    if (acc.db && d.db) acc.db->axpy(w, *d.db);
}

}  // namespace

SimState step(const SimState& state, const VoigtParams& params, RhsKind kind, double dt,
              IntegratorConfig::Method method, std::optional<int> galerkin_radius) {
    if (dt == 0 || !std::isfinite(dt)) throw ConfigError("step: dt must be nonzero and finite");
    SimState out;
    if (method == IntegratorConfig::Method::rk2) {
        const auto k1 = eval_rhs(state, params, kind, galerkin_radius);
        const auto k2 = eval_rhs(advanced(state, k1, dt / 2), params, kind, galerkin_radius);
        out = advanced(state, k2, dt);
    } else {
        auto k1 = eval_rhs(state, params, kind, galerkin_radius);
        const auto k2 = eval_rhs(advanced(state, k1, dt / 2), params, kind, galerkin_radius);
        const auto k3 = eval_rhs(advanced(state, k2, dt / 2), params, kind, galerkin_radius);
        const auto k4 = eval_rhs(advanced(state, k3, dt), params, kind, galerkin_radius);
        accumulate(k1, k2, 2.0);
        accumulate(k1, k3, 2.0);
        accumulate(k1, k4, 1.0);
        out = advanced(state, k1, dt / 6);
    }
    out.time = state.time + dt;
    // keep the trajectory on the solenoidal manifold
    out.u = leray_project(out.u);
    if (out.b) out.b = leray_project(*out.b);
    if (!out.u.all_finite() || (out.b && !out.b->all_finite()))
        throw BlowupDetected(state);
    return out;
}

SimState integrate(SimState state, const VoigtParams& params, RhsKind kind,
                   const IntegratorConfig& config, const DiagnosticsSink& sink) {
    config.validate(state.time);
    const double t0 = state.time;
    const double span = config.t_end - t0;
    const long nsteps = std::lround(span / config.dt);
    if (nsteps < 0 || std::abs(nsteps * config.dt - span) > 1e-9 * std::max(1.0, std::abs(span)))
        throw ConfigError("integrate: (t_end - t_start) must be an integer multiple of dt");

    const bool mhd = kind == RhsKind::mhd_voigt;
    const double e0 = mhd ? mhd_modified_energy(state, params)
                          : modified_energy(state.u, params.alpha);

    auto emit_and_check = [&](const SimState& s) {
        if (sink) sink(make_record(s, params, config.hm_max));
        if (e0 > 0) {
            const double e = mhd ? mhd_modified_energy(s, params)
                                 : modified_energy(s.u, params.alpha);
            const double drift = std::abs(e - e0) / e0;
            const double allowed =
                config.energy_drift_budget * std::max(1.0, std::abs(s.time - t0));
            if (drift > allowed) throw DriftBudgetExceeded(s, drift);
        }
    };

    emit_and_check(state);
    for (long i = 0; i < nsteps; ++i) {
        state = step(state, params, kind, config.dt, config.method, config.galerkin_radius);
        state.time = t0 + double(i + 1) * config.dt;  // avoid additive rounding
        if ((i + 1) % config.callback_stride == 0 || i + 1 == nsteps) emit_and_check(state);
    }
    return state;
}

double reversibility_check(const SimState& state, const VoigtParams& params, RhsKind kind,
                           const IntegratorConfig& config) {
    const double norm0 = state.u.l2_norm();
    if (norm0 == 0) return 0.0;
    SimState fwd = integrate(state, params, kind, config);
    IntegratorConfig back = config;
    back.dt = -config.dt;
    back.t_end = state.time;
    SimState ret = integrate(fwd, params, kind, back);
    const auto diff = ret.u - state.u;
    return diff.l2_norm() / norm0;
}

}  // namespace voigt
