#pragma once

#include <optional>
#include <span>
#include <vector>

#include "voigt/dynamics.hpp"
#include "voigt/norms.hpp"

namespace voigt {

/// Time-stamped monitored quantities along a run.
struct DiagnosticsRecord {
    double time = 0;
    double modified_energy = 0;  // |u|^2 + alpha^2 |grad u|^2
    double kinetic_energy = 0;   // |u|^2
    std::vector<std::pair<double, double>> hm_norms;  // (m, |u|_{H^m})
    double blowup_indicator = 0;  // alpha^2 |grad u|^2
    std::optional<double> tau_estimate;
    std::optional<double> mhd_energy;
};

/// |u|^2_{L^2} + alpha^2 |grad u|^2_{L^2}, conserved by Euler-Voigt.
double modified_energy(const SpectralField& u, double alpha);

/// alpha^2 |grad u|^2 + alpha_m^2 |grad b|^2 + |u|^2 + |b|^2.
double mhd_modified_energy(const SimState& state, const VoigtParams& params);

/// Builds a record with the standard monitors (H^1..H^m_max norms).
DiagnosticsRecord make_record(const SimState& state, const VoigtParams& params,
                              int hm_max = 3);

struct ShellEnergy {
    double radius = 0;       // shell center kappa_j = j
    double energy = 0;       // sum over j-1/2 < |k| <= j+1/2 of |u_hat|^2
    std::int64_t modes = 0;  // number of grid modes in the shell
};

/// Unit-width spherical shell partition of the spectrum; shell energies
/// sum to |u|^2 (the k=0 shell is included as radius 0).
std::vector<ShellEnergy> spectrum_shells(const SpectralField& u);

struct FitWindow {
    int lo = 3;   // first shell radius used
    int hi = -1;  // last shell radius; -1 means dealias cutoff minus 2
};

struct RadiusEstimate {
    double tau = 0;
    double fit_quality = 0;  // coefficient of determination
    bool conclusive = false;
    int shells_used = 0;
};

/// Analyticity-radius estimate from the exponential decay of the shell
/// spectrum: least-squares slope of (1/2) log(mean shell amplitude^2)
/// against -2pi kappa over the fit window. Shells are population-
/// normalized so a spectrum |u_hat| = e^{-tau 2pi|k|} is recovered exactly.
RadiusEstimate estimate_radius(const SpectralField& u, FitWindow window = {});

struct GrowthClassification {
    double exponent = 0;        // fitted q in |u|_{H^m} ~ C (1+t)^q
    double power_law_ssr = 0;   // residual of the power-law fit (log space)
    double exponential_ssr = 0; // residual of the exponential fit
    bool power_law_preferred = false;
    bool within_bound = false;  // q <= p(m) + margin
    double bound = 0;           // p(m)
};

/// H^m growth rate p(m): p(1)=1, p(2)=2, p(m)=5(3/2)^{m-3}-1 for m>=3.
double hm_growth_bound(int m);

/// Fits the H^m norm series against power-law and exponential growth and
/// checks the fitted exponent against p(m). Needs >= 4 records.
GrowthClassification hm_growth_monitor(std::span<const DiagnosticsRecord> records, int m,
                                       double margin = 1.0);

}  // namespace voigt
