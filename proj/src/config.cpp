#include "voigt/config.hpp"

#include <map>
#include <set>
#include <sstream>

namespace voigt {

namespace {

struct RawEntry {
    std::string value;
    int line = 0;
};

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

class Parser {
public:
    explicit Parser(std::map<std::string, RawEntry> raw) : raw_(std::move(raw)) {}

    template <class Fn>
    void key(const std::string& name, const Fn& apply) {
        auto it = raw_.find(name);
        if (it == raw_.end()) return;
        seen_.insert(name);
        try {
            apply(it->second.value);
        } catch (const std::exception& e) {
            fail(name, e.what());
        }
    }

    void fail(const std::string& name, const std::string& why) {
        auto it = raw_.find(name);
        const int line = it != raw_.end() ? it->second.line : 0;
        errors_ << "line " << line << ": key '" << name << "': " << why << "\n";
    }

    void finish() {
        for (const auto& [name, entry] : raw_)
            if (!seen_.count(name))
                errors_ << "line " << entry.line << ": unknown key '" << name << "'\n";
        const auto msg = errors_.str();
        if (!msg.empty()) throw ConfigError("config errors:\n" + msg);
    }

private:
    std::map<std::string, RawEntry> raw_;
    std::set<std::string> seen_;
    std::ostringstream errors_;
};

double to_double(const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::runtime_error("not a number: '" + s + "'");
    return v;
}

long to_long(const std::string& s) {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::runtime_error("not an integer: '" + s + "'");
    return v;
}

bool to_bool(const std::string& s) {
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    throw std::runtime_error("not a boolean: '" + s + "'");
}

std::vector<double> to_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_double(trim(item)));
    if (out.empty()) throw std::runtime_error("empty list");
    return out;
}

std::vector<int> to_int_list(const std::string& s) {
    std::vector<int> out;
    for (double v : to_double_list(s)) out.push_back(static_cast<int>(v));
    return out;
}

InitialConditionSpec::Kind ic_kind(const std::string& s) {
    if (s == "taylor_green") return InitialConditionSpec::Kind::taylor_green;
    if (s == "random_analytic") return InitialConditionSpec::Kind::random_analytic;
    if (s == "from_snapshot") return InitialConditionSpec::Kind::from_snapshot;
    throw std::runtime_error("unknown preset '" + s + "'");
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::vector<std::string>& overrides) {
    std::map<std::string, RawEntry> raw;
    std::ostringstream scan_errors;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            scan_errors << "line " << lineno << ": expected 'key = value'\n";
            continue;
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty()) {
            scan_errors << "line " << lineno << ": empty key\n";
            continue;
        }
        if (raw.count(key)) {
            scan_errors << "line " << lineno << ": duplicate key '" << key << "' (first on line "
                        << raw[key].line << ")\n";
            continue;
        }
        raw[key] = {value, lineno};
    }
    for (const auto& ov : overrides) {
        const auto eq = ov.find('=');
        if (eq == std::string::npos) {
            scan_errors << "override '" << ov << "': expected key=value\n";
            continue;
        }
        raw[trim(ov.substr(0, eq))] = {trim(ov.substr(eq + 1)), 0};
    }
    if (const auto msg = scan_errors.str(); !msg.empty())
        throw ConfigError("config errors:\n" + msg);

    RunConfig cfg;
    Parser p(std::move(raw));
    p.key("rhs", [&](const std::string& v) {
        if (v == "euler")
            cfg.rhs = RhsKind::euler;
        else if (v == "voigt")
            cfg.rhs = RhsKind::voigt;
        else if (v == "mhd_voigt")
            cfg.rhs = RhsKind::mhd_voigt;
        else
            throw std::runtime_error("must be euler, voigt, or mhd_voigt");
    });
    p.key("dim", [&](const std::string& v) {
        cfg.dim = static_cast<int>(to_long(v));
        if (cfg.dim != 2 && cfg.dim != 3) throw std::runtime_error("dim must be 2 or 3");
    });
    p.key("n", [&](const std::string& v) {
        cfg.n = static_cast<int>(to_long(v));
        if (cfg.n % 2) throw std::runtime_error("n must be even");
        if (cfg.n < 8) throw std::runtime_error("n must be >= 8");
    });
    p.key("alpha", [&](const std::string& v) {
        cfg.params.alpha = to_double(v);
        if (cfg.params.alpha < 0) throw std::runtime_error("alpha must be >= 0");
    });
    p.key("alpha_m", [&](const std::string& v) {
        cfg.params.alpha_m = to_double(v);
        if (cfg.params.alpha_m < 0) throw std::runtime_error("alpha_m must be >= 0");
    });
    p.key("method", [&](const std::string& v) {
        if (v == "rk4")
            cfg.integrator.method = IntegratorConfig::Method::rk4;
        else if (v == "rk2")
            cfg.integrator.method = IntegratorConfig::Method::rk2;
        else
            throw std::runtime_error("method must be rk4 or rk2");
    });
    p.key("dt", [&](const std::string& v) {
        cfg.integrator.dt = to_double(v);
        if (cfg.integrator.dt == 0) throw std::runtime_error("dt must be nonzero");
    });
    p.key("t_end", [&](const std::string& v) { cfg.integrator.t_end = to_double(v); });
    p.key("energy_drift_budget", [&](const std::string& v) {
        cfg.integrator.energy_drift_budget = to_double(v);
        if (cfg.integrator.energy_drift_budget <= 0)
            throw std::runtime_error("budget must be > 0");
    });
    p.key("callback_stride", [&](const std::string& v) {
        cfg.integrator.callback_stride = static_cast<int>(to_long(v));
        if (cfg.integrator.callback_stride < 1) throw std::runtime_error("must be >= 1");
    });
    p.key("hm_max", [&](const std::string& v) {
        cfg.integrator.hm_max = static_cast<int>(to_long(v));
        if (cfg.integrator.hm_max < 1 || cfg.integrator.hm_max > 4)
            throw std::runtime_error("hm_max must be in [1,4]");
    });
    p.key("galerkin_radius", [&](const std::string& v) {
        cfg.integrator.galerkin_radius = static_cast<int>(to_long(v));
    });
    p.key("ic", [&](const std::string& v) { cfg.ic.kind = ic_kind(v); });
    p.key("ic_seed", [&](const std::string& v) { cfg.ic.seed = to_long(v); });
    p.key("ic_tau0", [&](const std::string& v) {
        cfg.ic.tau0 = to_double(v);
        if (cfg.ic.tau0 < 0) throw std::runtime_error("tau0 must be >= 0");
    });
    p.key("ic_energy", [&](const std::string& v) {
        cfg.ic.energy = to_double(v);
        if (cfg.ic.energy <= 0) throw std::runtime_error("energy must be > 0");
    });
    p.key("ic_path", [&](const std::string& v) { cfg.ic.path = v; });
    p.key("ic_b", [&](const std::string& v) {
        if (v == "same_as_u")
            cfg.ic_b_same_as_u = true;
        else
            cfg.ic_b.kind = ic_kind(v);
    });
    p.key("ic_b_seed", [&](const std::string& v) { cfg.ic_b.seed = to_long(v); });
    p.key("ic_b_tau0", [&](const std::string& v) { cfg.ic_b.tau0 = to_double(v); });
    p.key("ic_b_energy", [&](const std::string& v) { cfg.ic_b.energy = to_double(v); });
    p.key("ic_b_path", [&](const std::string& v) { cfg.ic_b.path = v; });
    p.key("alphas", [&](const std::string& v) { cfg.alphas = to_double_list(v); });
    p.key("n_list", [&](const std::string& v) { cfg.n_list = to_int_list(v); });
    p.key("study_T", [&](const std::string& v) {
        cfg.study_T = to_double(v);
        if (cfg.study_T <= 0) throw std::runtime_error("study_T must be > 0");
    });
    p.key("output_dir", [&](const std::string& v) { cfg.output_dir = v; });
    p.key("force", [&](const std::string& v) { cfg.force = to_bool(v); });
    p.finish();
    return cfg;
}

std::string format_config(const RunConfig& cfg) {
    std::ostringstream out;
    out.precision(17);
    const char* rhs = cfg.rhs == RhsKind::euler    ? "euler"
                      : cfg.rhs == RhsKind::voigt  ? "voigt"
                                                   : "mhd_voigt";
    out << "rhs = " << rhs << "\n";
    out << "dim = " << cfg.dim << "\n";
    out << "n = " << cfg.n << "\n";
    out << "alpha = " << cfg.params.alpha << "\n";
    out << "alpha_m = " << cfg.params.alpha_m << "\n";
    out << "method = "
        << (cfg.integrator.method == IntegratorConfig::Method::rk4 ? "rk4" : "rk2") << "\n";
    out << "dt = " << cfg.integrator.dt << "\n";
    out << "t_end = " << cfg.integrator.t_end << "\n";
    out << "energy_drift_budget = " << cfg.integrator.energy_drift_budget << "\n";
    out << "callback_stride = " << cfg.integrator.callback_stride << "\n";
    out << "hm_max = " << cfg.integrator.hm_max << "\n";
    if (cfg.integrator.galerkin_radius)
        out << "galerkin_radius = " << *cfg.integrator.galerkin_radius << "\n";
    const auto ic_name = [](InitialConditionSpec::Kind k) {
        switch (k) {
            case InitialConditionSpec::Kind::taylor_green: return "taylor_green";
            case InitialConditionSpec::Kind::random_analytic: return "random_analytic";
            default: return "from_snapshot";
        }
    };
    out << "ic = " << ic_name(cfg.ic.kind) << "\n";
    out << "ic_seed = " << cfg.ic.seed << "\n";
    out << "ic_tau0 = " << cfg.ic.tau0 << "\n";
    out << "ic_energy = " << cfg.ic.energy << "\n";
    if (!cfg.ic.path.empty()) out << "ic_path = " << cfg.ic.path << "\n";
    if (cfg.rhs == RhsKind::mhd_voigt) {
        out << "ic_b = " << (cfg.ic_b_same_as_u ? "same_as_u" : ic_name(cfg.ic_b.kind)) << "\n";
        out << "ic_b_seed = " << cfg.ic_b.seed << "\n";
        out << "ic_b_tau0 = " << cfg.ic_b.tau0 << "\n";
        out << "ic_b_energy = " << cfg.ic_b.energy << "\n";
    }
    if (!cfg.alphas.empty()) {
        out << "alphas = ";
        for (std::size_t i = 0; i < cfg.alphas.size(); ++i)
            out << (i ? "," : "") << cfg.alphas[i];
        out << "\n";
    }
    if (!cfg.n_list.empty()) {
        out << "n_list = ";
        for (std::size_t i = 0; i < cfg.n_list.size(); ++i)
            out << (i ? "," : "") << cfg.n_list[i];
        out << "\n";
    }
    out << "study_T = " << cfg.study_T << "\n";
    out << "output_dir = " << cfg.output_dir << "\n";
    return out.str();
}

}  // namespace voigt
