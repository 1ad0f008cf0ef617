#pragma once

#include <string>
#include <vector>

#include "voigt/dynamics.hpp"
#include "voigt/integrate.hpp"

namespace voigt {

/// Initial-condition preset selection.
struct InitialConditionSpec {
    enum class Kind { taylor_green, random_analytic, from_snapshot };
    Kind kind = Kind::taylor_green;
    std::uint64_t seed = 1;
    double tau0 = 0.1;
    double energy = 1.0;
    std::string path;  // from_snapshot
};

/// A full experiment description, parsed from flat key = value text.
/// Keys are documented in docs/formats.md.
struct RunConfig {
    RhsKind rhs = RhsKind::voigt;
    int dim = 3;
    int n = 16;
    VoigtParams params;
    IntegratorConfig integrator;
    InitialConditionSpec ic;
    InitialConditionSpec ic_b;       // magnetic field (mhd_voigt only)
    bool ic_b_same_as_u = false;
    std::vector<double> alphas;      // converge / blowup sweeps
    std::vector<int> n_list;         // galerkin study
    double study_T = 0.5;            // sweep horizon (t_end covers simulate)
    std::string output_dir = "out";
    bool force = false;

    GridSpec grid() const { return GridSpec::make(dim, n); }
};

/// Parses the config text, then applies "key=value" overrides (CLI --set),
/// which replace file values. On any problem throws ConfigError whose
/// message lists every offending key with its line number.
RunConfig parse_config(const std::string& text,
                       const std::vector<std::string>& overrides = {});

/// Serializes a config back to the flat text format (the config echo).
std::string format_config(const RunConfig& cfg);

}  // namespace voigt
