#include "voigt/studies.hpp"

#include <algorithm>
#include <cmath>

#include "voigt/norms.hpp"

namespace voigt {

namespace {

void require_decreasing(const std::vector<double>& alphas, std::size_t min_count,
                        const char* who) {
    if (alphas.size() < min_count)
        throw ConfigError(std::string(who) + ": need at least " + std::to_string(min_count) +
                          " alpha values");
    for (std::size_t i = 0; i + 1 < alphas.size(); ++i)
        if (!(alphas[i] > alphas[i + 1]))
            throw ConfigError(std::string(who) + ": alphas must be strictly decreasing");
    for (double a : alphas)
        if (!(a > 0)) throw ConfigError(std::string(who) + ": alphas must be positive");
}

std::optional<double> loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > 0 && y[i] > 0) {
            lx.push_back(std::log(x[i]));
            ly.push_back(std::log(y[i]));
        }
    }
    if (lx.size() < 2) return std::nullopt;
    const auto n = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double varx = sxx - sx * sx / n;
    if (varx <= 0) return std::nullopt;
    return (sxy - sx * sy / n) / varx;
}

// Integrate sampling the state at ~sample_count equispaced times
// (always including t = 0 and t = T). visit(state) is called per sample.
template <class Visit>
void sampled_run(SimState state, const VoigtParams& params, RhsKind kind, double T, double dt,
                 int sample_count, const Visit& visit) {
    const long nsteps = std::lround(T / dt);
    const long stride = std::max<long>(1, nsteps / std::max(1, sample_count));
    visit(state);
    for (long i = 0; i < nsteps; ++i) {
        state = step(state, params, kind, dt);
        state.time = double(i + 1) * dt;
        if ((i + 1) % stride == 0 || i + 1 == nsteps) visit(state);
    }
}

}  // namespace

ConvergenceReport convergence_study(const SpectralField& u_in, std::vector<double> alphas,
                                    double T, double dt) {
    require_decreasing(alphas, 1, "convergence_study");
    ConvergenceReport report;
    report.degenerate = alphas.size() < 2;

    IntegratorConfig cfg;
    cfg.dt = dt;
    cfg.t_end = T;
    cfg.callback_stride = 1 << 20;  // endpoints only

    const SimState init{0.0, u_in, std::nullopt};
    const SimState ref = integrate(init, VoigtParams{}, RhsKind::euler, cfg);

    // half-dt reference guards against time-discretization contamination
    IntegratorConfig half = cfg;
    half.dt = dt / 2;
    const SimState ref_half = integrate(init, VoigtParams{}, RhsKind::euler, half);
    report.reference_time_error = (ref.u - ref_half.u).l2_norm();

    for (double a : alphas) {
        VoigtParams params{a, 0.0};
        const SimState end = integrate(init, params, RhsKind::voigt, cfg);
        const auto diff = ref.u - end.u;
        ConvergenceReport::Entry e;
        e.alpha = a;
        e.l2_error = diff.l2_norm();
        const double grad = sobolev_seminorm(diff, 1);
        e.modified_error = diff.l2_norm_sq() + a * a * grad * grad;
        report.errors.push_back(e);
    }

    std::vector<double> xs, ys;
    for (const auto& e : report.errors) {
        xs.push_back(e.alpha);
        ys.push_back(e.l2_error);
    }
    report.fitted_slope = report.degenerate ? std::nullopt : loglog_slope(xs, ys);
    return report;
}

BlowupReport blowup_sweep(const SpectralField& u_in, std::vector<double> alphas, double T,
                          double dt, int sample_count, bool check_resolution) {
    require_decreasing(alphas, 4, "blowup_sweep");
    BlowupReport report;
    report.alphas = alphas;

    auto indicator_series = [&](const SpectralField& ic, double alpha,
                                std::vector<double>* times_out, double* abs_drift_out) {
        std::vector<double> series;
        const VoigtParams params{alpha, 0.0};
        double e0 = -1, max_drift = 0;
        sampled_run(SimState{0.0, ic, std::nullopt}, params, RhsKind::voigt, T, dt, sample_count,
                    [&](const SimState& s) {
                        const double grad = sobolev_seminorm(s.u, 1);
                        series.push_back(alpha * alpha * grad * grad);
                        const double e = s.u.l2_norm_sq() + series.back();
                        if (e0 < 0) e0 = e;
                        max_drift = std::max(max_drift, std::abs(e - e0));
                        if (times_out) times_out->push_back(s.time);
                    });
        if (abs_drift_out) *abs_drift_out = max_drift;
        return series;
    };

    double smallest_drift = 0;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        double drift = 0;
        auto series = indicator_series(u_in, alphas[i],
                                       i == 0 ? &report.times : nullptr, &drift);
        report.indicator.push_back(std::move(series));
        report.run_drift.push_back(drift);
        if (i + 1 == alphas.size()) smallest_drift = drift;
    }

    report.noise_floor =
        std::max(10.0 * smallest_drift, 1e-14 * u_in.l2_norm_sq());

    // a + b alpha^2 fit over the three smallest alphas, per sample time
    const std::size_t nfit = 3;
    const std::size_t first = alphas.size() - nfit;
    for (std::size_t j = 0; j < report.times.size(); ++j) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = first; i < alphas.size(); ++i) {
            const double x = alphas[i] * alphas[i];
            const double y = report.indicator[i][j];
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double n = double(nfit);
        const double varx = sxx - sx * sx / n;
        const double b = varx > 0 ? (sxy - sx * sy / n) / varx : 0.0;
        report.extrapolated.push_back(sy / n - b * sx / n);
    }

    if (check_resolution) {
        const auto fine_ic = spectral_prolong(u_in, 2 * u_in.grid().n);
        auto fine = indicator_series(fine_ic, alphas.back(), nullptr, nullptr);
        const auto& coarse = report.indicator.back();
        for (std::size_t j = 0; j < coarse.size() && j < fine.size(); ++j) {
            const double scale = std::max({coarse[j], fine[j], report.noise_floor});
            if (std::abs(coarse[j] - fine[j]) > 0.2 * scale) {
                report.resolution_dependent = true;
                break;
            }
        }
    }

    if (report.resolution_dependent) {
        report.verdict = BlowupVerdict::inconclusive;
    } else {
        bool singular = false;
        for (std::size_t j = 0; j < report.times.size(); ++j) {
            if (report.extrapolated[j] <= report.noise_floor) continue;
            double min_ind = report.indicator[0][j];
            for (const auto& row : report.indicator) min_ind = std::min(min_ind, row[j]);
            if (min_ind > report.noise_floor) {  // persists for every alpha
                singular = true;
                break;
            }
        }
        report.verdict = singular ? BlowupVerdict::suggests_singularity
                                  : BlowupVerdict::consistent_with_regularity;
    }
    return report;
}

GalerkinCauchyReport galerkin_cauchy_test(const SpectralField& u_in, std::vector<int> n_list,
                                          double T, double alpha, double dt, int sample_count) {
    GalerkinCauchyReport report;
    report.n_values = n_list;
    if (n_list.size() < 2) {
        report.degenerate = true;
        return report;
    }
    for (std::size_t i = 0; i + 1 < n_list.size(); ++i)
        if (!(n_list[i] < n_list[i + 1]))
            throw ConfigError("galerkin_cauchy_test: resolutions must be increasing");
    if (n_list.back() > u_in.grid().dealias_cutoff())
        throw ConfigError("galerkin_cauchy_test: largest N exceeds the grid's dealias ball");

    const VoigtParams params{alpha, 0.0};
    std::vector<std::vector<SpectralField>> snapshots(n_list.size());
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        const long nsteps = std::lround(T / dt);
        const long stride = std::max<long>(1, nsteps / std::max(1, sample_count));
        auto state = galerkin_truncate(SimState{0.0, u_in, std::nullopt}, n_list[i]);
        snapshots[i].push_back(state.u);
        for (long s = 0; s < nsteps; ++s) {
            state = step(state, params, RhsKind::voigt, dt, IntegratorConfig::Method::rk4,
                         n_list[i]);
            if ((s + 1) % stride == 0 || s + 1 == nsteps) snapshots[i].push_back(state.u);
        }
    }
    for (std::size_t i = 0; i + 1 < n_list.size(); ++i) {
        double sup = 0;
        const auto count = std::min(snapshots[i].size(), snapshots[i + 1].size());
        for (std::size_t j = 0; j < count; ++j)
            sup = std::max(sup, sobolev_seminorm(snapshots[i][j] - snapshots[i + 1][j], 1));
        report.differences.push_back(sup);
    }
    return report;
}

}  // namespace voigt
