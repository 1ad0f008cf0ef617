#pragma once

#include "voigt/integrate.hpp"

namespace voigt {

/// alpha -> 0 convergence against a resolved Euler reference.
struct ConvergenceReport {
    struct Entry {
        double alpha = 0;
        double l2_error = 0;        // |u - u_alpha|_{L^2} at t = T
        double modified_error = 0;  // |u - u_alpha|^2 + alpha^2 |grad(u - u_alpha)|^2
    };
    std::vector<Entry> errors;           // alphas strictly decreasing
    std::optional<double> fitted_slope;  // of log(l2_error) vs log(alpha)
    double reference_time_error = 0;     // |u_ref(dt) - u_ref(dt/2)| guard
    bool degenerate = false;             // fewer than 2 alphas, no slope
};

/// Runs the Euler reference (alpha = 0) and one Voigt run per alpha from the
/// same initial data on the same grid and dt; errors evaluated at t = T.
/// A half-dt reference re-run guards against time-error contamination.
ConvergenceReport convergence_study(const SpectralField& u_in, std::vector<double> alphas,
                                    double T, double dt);

enum class BlowupVerdict { consistent_with_regularity, suggests_singularity, inconclusive };

struct BlowupReport {
    std::vector<double> alphas;  // strictly decreasing
    std::vector<double> times;
    // indicator[i][j] = alpha_i^2 |grad u_{alpha_i}(t_j)|^2
    std::vector<std::vector<double>> indicator;
    std::vector<double> extrapolated;  // a of the a + b alpha^2 fit, per time
    double noise_floor = 0;
    std::vector<double> run_drift;     // per-run modified-energy drift
    bool resolution_dependent = false;
    BlowupVerdict verdict = BlowupVerdict::inconclusive;
};

/// Sweeps the blow-up indicator alpha^2 |grad u_alpha(t)|^2 over decreasing
/// alphas and extrapolates linearly in alpha^2 (three smallest alphas).
/// check_resolution re-runs the smallest alpha at 2n and flags > 20%
/// indicator disagreement as inconclusive.
BlowupReport blowup_sweep(const SpectralField& u_in, std::vector<double> alphas, double T,
                          double dt, int sample_count = 20, bool check_resolution = true);

/// |u_N - u_{2N}|_{C([0,T],V)} table for nested Galerkin truncations; the
/// V norm is the H^1 seminorm, the sup is taken over sampled times.
struct GalerkinCauchyReport {
    std::vector<int> n_values;
    std::vector<double> differences;  // size n_values.size() - 1
    bool degenerate = false;
};

GalerkinCauchyReport galerkin_cauchy_test(const SpectralField& u_in,
                                          std::vector<int> n_list, double T, double alpha,
                                          double dt, int sample_count = 20);

}  // namespace voigt
