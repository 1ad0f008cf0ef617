#include "voigt/dynamics.hpp"

#include <numbers>

#include "voigt/transform.hpp"

namespace voigt {

static constexpr double two_pi = 2.0 * std::numbers::pi;
static constexpr double solenoidal_tol = 1e-8;

namespace {

// Dealiased (w1 . grad) w2 without the Leray projection, in spectral space.
// Inputs are truncated to the 2/3 ball first so the pointwise product is
// alias-free on the retained modes.
SpectralField advection_raw(const SpectralField& w1, const SpectralField& w2) {
    if (!(w1.grid() == w2.grid()))
        throw ContractViolation("advection: fields live on different grids");
    const auto rule = TruncationRule::two_thirds();
    const auto w1d = dealias_truncate(w1, rule);
    const auto w2d = dealias_truncate(w2, rule);
    const auto w1p = to_physical(w1d);
    auto conv = PhysicalField::zero(w1.grid(), w2.components());
    for (int j = 0; j < w1.grid().dim; ++j) {
        const auto djw2 = to_physical(partial_derivative(w2d, j));
        for (int i = 0; i < w2.components(); ++i)
            conv.comp[i] += w1p.comp[j] * djw2.comp[i];
    }
    return dealias_truncate(to_spectral(conv), rule);
}

void require_solenoidal(const SpectralField& f, const char* who) {
    if (solenoidal_defect(f) > solenoidal_tol)
        throw ContractViolation(std::string(who) + ": input field is not solenoidal");
}

}  // namespace

SpectralField bilinear_term(const SpectralField& w1, const SpectralField& w2) {
    return leray_project(advection_raw(w1, w2));
}

SpectralField nonlinear_term(const SpectralField& u) {
    require_solenoidal(u, "nonlinear_term");
    return bilinear_term(u, u);
}

SpectralField rhs_euler(const SimState& state) {
    auto f = nonlinear_term(state.u);
    f *= -1.0;
    return f;
}

SpectralField rhs_voigt(const SimState& state, const VoigtParams& params) {
    params.validate();
    auto f = rhs_euler(state);
    if (params.alpha == 0) return f;
    return helmholtz_inverse(f, params.alpha);
}

std::pair<SpectralField, SpectralField> rhs_mhd_voigt(const SimState& state,
                                                      const VoigtParams& params) {
    params.validate();
    if (!state.b) throw ContractViolation("rhs_mhd_voigt: state has no magnetic field");
    require_solenoidal(state.u, "rhs_mhd_voigt");
    require_solenoidal(*state.b, "rhs_mhd_voigt");
    const auto& u = state.u;
    const auto& b = *state.b;
    auto du = bilinear_term(b, b) - bilinear_term(u, u);
    auto db = bilinear_term(b, u) - bilinear_term(u, b);
    return {helmholtz_inverse(du, params.alpha), helmholtz_inverse(db, params.alpha_m)};
}

PressureFields recover_pressure(const SimState& state, const VoigtParams& params) {
    params.validate();
    require_solenoidal(state.u, "recover_pressure");
    const auto& grid = state.u.grid();
    const auto& t = ModeTable::get(grid);

    auto poisson_solve = [&](const SpectralField& g) {
        // -lap p = div g  =>  p_hat = i (k . g_hat) / (2pi |k|^2)
        auto p = SpectralField::zero(grid, 1);
        for (int d = 0; d < grid.dim; ++d) p.comp(0) += t.k[d] * g.comp(d);
        p.comp(0) *= std::complex<double>(0.0, 1.0) / two_pi * t.inv_ksq;
        return p;
    };

    PressureFields out{SpectralField::zero(grid, 1), std::nullopt};
    auto g = advection_raw(state.u, state.u);
    if (state.b) {
        require_solenoidal(*state.b, "recover_pressure");
        g -= advection_raw(*state.b, *state.b);
        out.p = poisson_solve(g);
        // the 1/2 grad|b|^2 term contributes -s_hat/2 directly
        const auto bp = to_physical(dealias_truncate(*state.b, TruncationRule::two_thirds()));
        auto s = PhysicalField::zero(grid, 1);
        for (int d = 0; d < grid.dim; ++d) s.comp[0] += bp.comp[d] * bp.comp[d];
        auto sh = dealias_truncate(to_spectral(s), TruncationRule::two_thirds());
        out.p.comp(0) -= 0.5 * sh.comp(0);
        out.p.set_zero_mean();

        auto h = advection_raw(state.u, *state.b) - advection_raw(*state.b, state.u);
        out.q = poisson_solve(h);
        out.q->set_zero_mean();
    } else {
        out.p = poisson_solve(g);
        out.p.set_zero_mean();
    }
    return out;
}

SimState galerkin_truncate(const SimState& state, int n_prime) {
    const auto& grid = state.u.grid();
    if (n_prime > grid.n / 2)
        throw ConfigError("galerkin_truncate: n_prime exceeds n/2");
    auto out = state;
    out.u = dealias_truncate(state.u, TruncationRule::sharp(n_prime));
    if (out.b) out.b = dealias_truncate(*state.b, TruncationRule::sharp(n_prime));
    return out;
}

}  // namespace voigt
