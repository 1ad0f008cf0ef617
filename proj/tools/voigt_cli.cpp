// Command-line driver for the Euler-Voigt / MHD-Voigt simulation laboratory.
//
// Subcommands: simulate, converge, blowup, gevrey, galerkin, verify.
// Exit codes: 0 success, 1 configuration error, 2 runtime abort (NaN/drift).

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "voigt/config.hpp"
#include "voigt/csv.hpp"
#include "voigt/initial_conditions.hpp"
#include "voigt/oracle.hpp"
#include "voigt/snapshot.hpp"
#include "voigt/studies.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace voigt;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SpectralField build_ic(const InitialConditionSpec& spec, const GridSpec& grid) {
    switch (spec.kind) {
        case InitialConditionSpec::Kind::taylor_green:
            return taylor_green(grid);
        case InitialConditionSpec::Kind::random_analytic:
            return random_analytic(grid, spec.seed, spec.tau0, spec.energy);
        case InitialConditionSpec::Kind::from_snapshot: {
            auto snap = read_snapshot(spec.path);
            if (!(snap.state.u.grid() == grid))
                throw ConfigError("snapshot grid does not match config: " + spec.path);
            return snap.state.u;
        }
    }
    throw ConfigError("unreachable ic kind");
}

SimState build_state(const RunConfig& cfg) {
    SimState state;
    state.u = build_ic(cfg.ic, cfg.grid());
    if (cfg.rhs == RhsKind::mhd_voigt) {
        if (cfg.ic_b_same_as_u)
            state.b = state.u;
        else
            state.b = build_ic(cfg.ic_b, cfg.grid());
    }
    return state;
}

fs::path prepare_output_dir(const RunConfig& cfg) {
    fs::path dir(cfg.output_dir);
    if (fs::exists(dir) && !cfg.force)
        throw ConfigError("output directory exists (use --force to overwrite): " + dir.string());
    fs::create_directories(dir);
    std::ofstream echo(dir / "config_echo.txt");
    echo << format_config(cfg);
    return dir;
}

void print_summary(const json& j) { std::cout << "summary: " << j.dump() << "\n"; }

int run_simulate(const RunConfig& cfg) {
    const auto dir = prepare_output_dir(cfg);
    auto state = build_state(cfg);
    std::vector<DiagnosticsRecord> records;
    auto final_state = integrate(state, cfg.params, cfg.rhs, cfg.integrator,
                                 [&](const DiagnosticsRecord& r) { records.push_back(r); });
    write_csv(records, dir / "series.csv");
    write_snapshot(final_state, cfg.params, dir / "final.snapshot");
    // for MHD runs the conserved quantity is the combined energy
    auto conserved = [](const DiagnosticsRecord& r) {
        return r.mhd_energy ? *r.mhd_energy : r.modified_energy;
    };
    const double e0 = conserved(records.front());
    const double eT = conserved(records.back());
    json j{{"command", "simulate"},
           {"t_end", final_state.time},
           {"records", records.size()},
           {"modified_energy_initial", e0},
           {"modified_energy_final", eT},
           {"relative_drift", e0 > 0 ? std::abs(eT - e0) / e0 : 0.0},
           {"output_dir", dir.string()}};
    std::ofstream(dir / "summary.json") << j.dump(2) << "\n";
    print_summary(j);
    return 0;
}

int run_converge(const RunConfig& cfg) {
    if (cfg.alphas.empty()) throw ConfigError("converge: 'alphas' must be set");
    const auto dir = prepare_output_dir(cfg);
    auto u_in = build_ic(cfg.ic, cfg.grid());
    auto report = convergence_study(u_in, cfg.alphas, cfg.study_T, cfg.integrator.dt);
    std::vector<std::vector<double>> rows;
    for (const auto& e : report.errors)
        rows.push_back({e.alpha, e.l2_error, e.modified_error});
    write_csv_table({"alpha", "l2_error", "modified_error"}, rows, dir / "convergence.csv");
    json j{{"command", "converge"},
           {"degenerate", report.degenerate},
           {"reference_time_error", report.reference_time_error},
           {"output_dir", dir.string()}};
    if (report.fitted_slope) j["fitted_slope"] = *report.fitted_slope;
    std::ofstream(dir / "summary.json") << j.dump(2) << "\n";
    print_summary(j);
    return 0;
}

int run_blowup(const RunConfig& cfg) {
    if (cfg.alphas.empty()) throw ConfigError("blowup: 'alphas' must be set");
    const auto dir = prepare_output_dir(cfg);
    auto u_in = build_ic(cfg.ic, cfg.grid());
    auto report = blowup_sweep(u_in, cfg.alphas, cfg.study_T, cfg.integrator.dt);
    std::vector<std::string> cols{"time_s"};
    for (double a : report.alphas) cols.push_back("indicator_alpha_" + std::to_string(a));
    cols.push_back("extrapolated");
    std::vector<std::vector<double>> rows;
    for (std::size_t j = 0; j < report.times.size(); ++j) {
        std::vector<double> row{report.times[j]};
        for (const auto& series : report.indicator) row.push_back(series[j]);
        row.push_back(report.extrapolated[j]);
        rows.push_back(row);
    }
    write_csv_table(cols, rows, dir / "blowup.csv");
    const char* verdict = report.verdict == BlowupVerdict::consistent_with_regularity
                              ? "consistent_with_regularity"
                          : report.verdict == BlowupVerdict::suggests_singularity
                              ? "suggests_singularity"
                              : "inconclusive";
    json j{{"command", "blowup"},
           {"verdict", verdict},
           {"noise_floor", report.noise_floor},
           {"resolution_dependent", report.resolution_dependent},
           {"output_dir", dir.string()}};
    std::ofstream(dir / "summary.json") << j.dump(2) << "\n";
    print_summary(j);
    return 0;
}

int run_gevrey(const RunConfig& cfg) {
    const auto dir = prepare_output_dir(cfg);
    auto state = build_state(cfg);
    std::vector<DiagnosticsRecord> records;
    integrate(state, cfg.params, cfg.rhs, cfg.integrator, [&](const DiagnosticsRecord& r) {
        records.push_back(r);
    });
    // re-run the estimator over sampled snapshots for the tau series
    std::vector<std::vector<double>> rows;
    {
        auto s = state;
        const long nsteps = std::lround((cfg.integrator.t_end - s.time) / cfg.integrator.dt);
        auto push = [&](const SimState& cur) {
            auto est = estimate_radius(cur.u);
            rows.push_back({cur.time, est.tau, est.fit_quality, est.conclusive ? 1.0 : 0.0});
        };
        push(s);
        for (long i = 0; i < nsteps; ++i) {
            s = step(s, cfg.params, cfg.rhs, cfg.integrator.dt, cfg.integrator.method,
                     cfg.integrator.galerkin_radius);
            if ((i + 1) % cfg.integrator.callback_stride == 0 || i + 1 == nsteps) push(s);
        }
    }
    write_csv_table({"time_s", "tau_estimate", "fit_r2", "conclusive"}, rows,
                    dir / "gevrey.csv");
    json j{{"command", "gevrey"},
           {"tau_initial", rows.front()[1]},
           {"tau_final", rows.back()[1]},
           {"output_dir", dir.string()}};
    std::ofstream(dir / "summary.json") << j.dump(2) << "\n";
    print_summary(j);
    return 0;
}

int run_galerkin(const RunConfig& cfg) {
    if (cfg.n_list.size() < 2) throw ConfigError("galerkin: 'n_list' needs >= 2 entries");
    const auto dir = prepare_output_dir(cfg);
    auto u_in = build_ic(cfg.ic, cfg.grid());
    auto report = galerkin_cauchy_test(u_in, cfg.n_list, cfg.study_T, cfg.params.alpha,
                                       cfg.integrator.dt);
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i + 1 < report.n_values.size(); ++i)
        rows.push_back({double(report.n_values[i]), double(report.n_values[i + 1]),
                        report.differences[i]});
    write_csv_table({"n", "n_next", "sup_v_difference"}, rows, dir / "galerkin.csv");
    bool decreasing = true;
    for (std::size_t i = 0; i + 1 < report.differences.size(); ++i)
        decreasing &= report.differences[i] > report.differences[i + 1];
    json j{{"command", "galerkin"},
           {"monotone_decreasing", decreasing},
           {"output_dir", dir.string()}};
    std::ofstream(dir / "summary.json") << j.dump(2) << "\n";
    print_summary(j);
    return 0;
}

// Oracle cross-checks on tiny grids; the CLI's built-in self test.
int run_verify() {
    int failures = 0;
    auto check = [&](const char* what, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
        if (!ok) ++failures;
    };
    for (int dim : {2, 3}) {
        for (int n : {8, 12}) {
            auto grid = GridSpec::make(dim, n);
            double worst = 0, worst_btest = 0;
            for (std::uint64_t seed = 1; seed <= 25; ++seed) {
                auto u = random_analytic(grid, seed, 0.02, 1.0);
                auto fast = nonlinear_term(u);
                auto slow = oracle::convolution_nonlinear_term(u);
                const double denom = std::max(fast.l2_norm(), slow.l2_norm());
                if (denom > 0) worst = std::max(worst, (fast - slow).l2_norm() / denom);
                worst_btest = std::max(worst_btest,
                                       std::abs(inner_product(slow, u)) / slow.l2_norm());
            }
            const std::string label = "oracle agreement dim=" + std::to_string(dim) +
                                      " n=" + std::to_string(n);
            check(label.c_str(), worst < 1e-12);
            const std::string label2 = "oracle <B(u,u),u> = 0 dim=" + std::to_string(dim) +
                                       " n=" + std::to_string(n);
            check(label2.c_str(), worst_btest < 1e-11);
        }
    }
    json j{{"command", "verify"}, {"failures", failures}};
    print_summary(j);
    return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pseudo-spectral Euler-Voigt / MHD-Voigt laboratory"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    bool force = false;

    auto add_common = [&](CLI::App* cmd, bool config_required = true) {
        auto* opt = cmd->add_option("--config", config_path, "config file (key = value)");
        if (config_required) opt->required();
        cmd->add_option("--set", overrides, "override: key=value (repeatable)");
        cmd->add_flag("--force", force, "overwrite the output directory");
    };

    auto* simulate = app.add_subcommand("simulate", "integrate one trajectory");
    auto* converge = app.add_subcommand("converge", "alpha -> 0 convergence study");
    auto* blowup = app.add_subcommand("blowup", "blow-up indicator sweep");
    auto* gevrey = app.add_subcommand("gevrey", "analyticity-radius series");
    auto* galerkin = app.add_subcommand("galerkin", "Galerkin Cauchy-sequence table");
    auto* verify = app.add_subcommand("verify", "run the oracle cross-check suite");
    for (auto* cmd : {simulate, converge, blowup, gevrey, galerkin}) add_common(cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (verify->parsed()) return run_verify();
        auto cfg = parse_config(read_file(config_path), overrides);
        if (force) cfg.force = true;
        if (simulate->parsed()) return run_simulate(cfg);
        if (converge->parsed()) return run_converge(cfg);
        if (blowup->parsed()) return run_blowup(cfg);
        if (gevrey->parsed()) return run_gevrey(cfg);
        if (galerkin->parsed()) return run_galerkin(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "runtime abort: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
