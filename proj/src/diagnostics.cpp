#include "voigt/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace voigt {

static constexpr double two_pi = 2.0 * std::numbers::pi;

double modified_energy(const SpectralField& u, double alpha) {
    const double grad = sobolev_seminorm(u, 1);
    return u.l2_norm_sq() + alpha * alpha * grad * grad;
}

double mhd_modified_energy(const SimState& state, const VoigtParams& params) {
    if (!state.b) throw ContractViolation("mhd_modified_energy: no magnetic field");
    const double gu = sobolev_seminorm(state.u, 1);
    const double gb = sobolev_seminorm(*state.b, 1);
    return params.alpha * params.alpha * gu * gu + params.alpha_m * params.alpha_m * gb * gb +
           state.u.l2_norm_sq() + state.b->l2_norm_sq();
}

DiagnosticsRecord make_record(const SimState& state, const VoigtParams& params, int hm_max) {
    DiagnosticsRecord r;
    r.time = state.time;
    r.kinetic_energy = state.u.l2_norm_sq();
    const double grad = sobolev_seminorm(state.u, 1);
    r.blowup_indicator = params.alpha * params.alpha * grad * grad;
    r.modified_energy = r.kinetic_energy + r.blowup_indicator;
    for (int m = 1; m <= hm_max; ++m)
        r.hm_norms.emplace_back(double(m), sobolev_norm(state.u, double(m)));
    if (state.b) r.mhd_energy = mhd_modified_energy(state, params);
    return r;
}

std::vector<ShellEnergy> spectrum_shells(const SpectralField& u) {
    const auto& t = ModeTable::get(u.grid());
    const int max_shell = static_cast<int>(std::ceil(t.kabs.maxCoeff())) + 1;
    std::vector<ShellEnergy> shells(max_shell + 1);
    for (int j = 0; j <= max_shell; ++j) shells[j].radius = j;
    const auto m = u.grid().num_modes();
    for (std::int64_t i = 0; i < m; ++i) {
        const int j = static_cast<int>(std::lround(t.kabs(i)));
        double a2 = 0;
        for (int c = 0; c < u.components(); ++c) a2 += std::norm(u.comp(c)(i));
        shells[j].energy += a2;
        shells[j].modes += 1;
    }
    while (!shells.empty() && shells.back().modes == 0) shells.pop_back();
    return shells;
}

RadiusEstimate estimate_radius(const SpectralField& u, FitWindow window) {
    constexpr double energy_floor = 1e-28;
    const auto shells = spectrum_shells(u);
    int hi = window.hi >= 0 ? window.hi : u.grid().dealias_cutoff() - 2;

    std::vector<double> xs, ys;  // x = -2pi kappa, y = 1/2 log(E_j / N_j)
    for (const auto& s : shells) {
        const int j = static_cast<int>(s.radius);
        if (j < window.lo || j > hi) continue;
        if (s.modes == 0 || s.energy < energy_floor) continue;
        xs.push_back(-two_pi * s.radius);
        ys.push_back(0.5 * std::log(s.energy / double(s.modes)));
    }
    RadiusEstimate out;
    out.shells_used = static_cast<int>(xs.size());
    if (xs.size() < 4) return out;  // inconclusive

    const auto n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
        syy += ys[i] * ys[i];
    }
    const double varx = sxx - sx * sx / n;
    const double vary = syy - sy * sy / n;
    const double cov = sxy - sx * sy / n;
    if (varx <= 0) return out;
    const double slope = cov / varx;
    out.tau = std::max(0.0, slope);
    out.fit_quality = vary > 0 ? (cov * cov) / (varx * vary) : 1.0;
    out.conclusive = true;
    return out;
}

double hm_growth_bound(int m) {
    if (m < 1) throw ConfigError("hm_growth_bound: m must be >= 1");
    if (m == 1) return 1.0;
    if (m == 2) return 2.0;
    return 5.0 * std::pow(1.5, m - 3) - 1.0;
}

namespace {

// Least-squares fit y = a + b x; returns residual sum of squares and b.
struct LineFit {
    double slope = 0, ssr = 0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const auto n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    LineFit f;
    const double varx = sxx - sx * sx / n;
    if (varx <= 0) return f;
    f.slope = (sxy - sx * sy / n) / varx;
    const double a = (sy - f.slope * sx) / n;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - a - f.slope * x[i];
        f.ssr += r * r;
    }
    return f;
}

}  // namespace

GrowthClassification hm_growth_monitor(std::span<const DiagnosticsRecord> records, int m,
                                       double margin) {
    if (records.size() < 4)
        throw ConfigError("hm_growth_monitor: need at least 4 records");
    std::vector<double> logv, log1pt, t;
    for (const auto& r : records) {
        double v = -1;
        for (const auto& [order, val] : r.hm_norms)
            if (static_cast<int>(order) == m) v = val;
        if (v < 0) throw ConfigError("hm_growth_monitor: records lack the requested H^m norm");
        logv.push_back(std::log(std::max(v, 1e-300)));
        log1pt.push_back(std::log1p(std::abs(r.time)));
        t.push_back(std::abs(r.time));
    }
    const auto power = fit_line(log1pt, logv);
    const auto expo = fit_line(t, logv);
    GrowthClassification g;
    g.exponent = power.slope;
    g.power_law_ssr = power.ssr;
    g.exponential_ssr = expo.ssr;
    g.power_law_preferred = power.ssr <= expo.ssr;
    g.bound = hm_growth_bound(m);
    g.within_bound = std::isfinite(power.slope) && power.slope <= g.bound + margin;
    return g;
}

}  // namespace voigt
