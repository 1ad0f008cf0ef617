#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "test_helpers.hpp"
#include "voigt/config.hpp"
#include "voigt/csv.hpp"
#include "voigt/snapshot.hpp"

using namespace voigt;
using namespace voigt::testing;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const char* name) {
    return fs::temp_directory_path() / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("parse_config") {
    SUBCASE("minimal config fills defaults") {
        auto cfg = parse_config("n = 16\n");
        CHECK(cfg.n == 16);
        CHECK(cfg.dim == 3);
        CHECK(cfg.rhs == RhsKind::voigt);
        CHECK(cfg.integrator.dt == 1e-3);
        CHECK(cfg.ic.kind == InitialConditionSpec::Kind::taylor_green);
    }
    SUBCASE("full config round trips through format_config") {
        const std::string text =
            "rhs = mhd_voigt\n"
            "dim = 2\n"
            "n = 32\n"
            "alpha = 0.1\n"
            "alpha_m = 0.05\n"
            "dt = 0.002\n"
            "t_end = 1.5\n"
            "ic = random_analytic\n"
            "ic_seed = 7\n"
            "ic_b = same_as_u\n"
            "alphas = 0.1, 0.05, 0.025\n"
            "output_dir = /tmp/run1\n";
        auto cfg = parse_config(text);
        CHECK(cfg.rhs == RhsKind::mhd_voigt);
        CHECK(cfg.params.alpha_m == 0.05);
        CHECK(cfg.ic_b_same_as_u);
        REQUIRE(cfg.alphas.size() == 3);
        CHECK(cfg.alphas[1] == 0.05);
        auto cfg2 = parse_config(format_config(cfg));
        CHECK(format_config(cfg2) == format_config(cfg));
    }
    SUBCASE("comments and blank lines are ignored") {
        auto cfg = parse_config("# a comment\n\nn = 16  # trailing\n");
        CHECK(cfg.n == 16);
    }
    SUBCASE("odd n is rejected with its line number") {
        try {
            parse_config("dim = 2\nn = 7\n");
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("line 2") != std::string::npos);
            CHECK(msg.find("even") != std::string::npos);
        }
    }
    SUBCASE("duplicate key is rejected") {
        try {
            parse_config("n = 16\nn = 32\n");
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("duplicate") != std::string::npos);
            CHECK(msg.find("line 2") != std::string::npos);
        }
    }
    SUBCASE("unknown key is rejected with its line number") {
        try {
            parse_config("n = 16\nwhatever = 3\n");
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("unknown key 'whatever'") != std::string::npos);
            CHECK(msg.find("line 2") != std::string::npos);
        }
    }
    SUBCASE("all errors are reported at once") {
        try {
            parse_config("n = 7\ndim = 5\nbogus = 1\n");
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("'n'") != std::string::npos);
            CHECK(msg.find("'dim'") != std::string::npos);
            CHECK(msg.find("'bogus'") != std::string::npos);
        }
    }
    SUBCASE("overrides replace file values") {
        auto cfg = parse_config("n = 16\nalpha = 0.1\n", {"alpha=0.2", "dt=0.01"});
        CHECK(cfg.params.alpha == 0.2);
        CHECK(cfg.integrator.dt == 0.01);
        CHECK(cfg.n == 16);
    }
}

TEST_CASE("snapshot round trip") {
    auto g = GridSpec::make(3, 8);
    SimState s{1.25, random_solenoidal(g, 90), random_solenoidal(g, 91)};
    const VoigtParams params{0.1, 0.05};
    const auto path = temp_file("voigt_test_snapshot.bin");

    write_snapshot(s, params, path);
    auto snap = read_snapshot(path);

    SUBCASE("bit-exact state and parameters") {
        CHECK(snap.state.time == s.time);
        CHECK(snap.params.alpha == params.alpha);
        CHECK(snap.params.alpha_m == params.alpha_m);
        REQUIRE(snap.state.b.has_value());
        for (int c = 0; c < g.dim; ++c) {
            CHECK((snap.state.u.comp(c) == s.u.comp(c)).all());
            CHECK((snap.state.b->comp(c) == s.b->comp(c)).all());
        }
    }
    SUBCASE("velocity-only snapshot omits b") {
        SimState uonly{0.5, s.u, std::nullopt};
        write_snapshot(uonly, {0.1, 0}, path);
        auto snap2 = read_snapshot(path);
        CHECK_FALSE(snap2.state.b.has_value());
        CHECK((snap2.state.u.comp(0) == s.u.comp(0)).all());
    }
    SUBCASE("corrupted magic is a typed error") {
        auto bytes = slurp(path);
        bytes[0] = 'X';
        std::ofstream(path, std::ios::binary).write(bytes.data(), std::streamsize(bytes.size()));
        CHECK_THROWS_AS(read_snapshot(path), FormatError);
    }
    SUBCASE("bumped version is a typed error") {
        write_snapshot(s, params, path);
        auto bytes = slurp(path);
        bytes[8] = 2;  // version lives right after the 8-byte magic
        std::ofstream(path, std::ios::binary).write(bytes.data(), std::streamsize(bytes.size()));
        CHECK_THROWS_AS(read_snapshot(path), FormatError);
    }
    SUBCASE("truncated file is a typed error") {
        write_snapshot(s, params, path);
        auto bytes = slurp(path);
        bytes.resize(bytes.size() / 2);
        std::ofstream(path, std::ios::binary).write(bytes.data(), std::streamsize(bytes.size()));
        CHECK_THROWS_AS(read_snapshot(path), FormatError);
    }
    std::remove(path.string().c_str());
}

TEST_CASE("csv writer") {
    const auto path = temp_file("voigt_test_series.csv");
    SUBCASE("empty series writes the header only") {
        write_csv({}, path);
        std::ifstream in(path);
        std::string line;
        REQUIRE(std::getline(in, line));
        CHECK(line == "time_s,modified_energy,kinetic_energy,blowup_indicator");
        CHECK_FALSE(std::getline(in, line));
    }
    SUBCASE("one record writes two lines and parses back exactly") {
        DiagnosticsRecord r;
        r.time = 0.125;
        r.modified_energy = 0.8947841760435743;  // 17 digits must survive
        r.kinetic_energy = 0.5;
        r.blowup_indicator = r.modified_energy - 0.5;
        r.hm_norms = {{1, 1.5}, {2, 2.5}};
        std::vector<DiagnosticsRecord> recs{r};
        write_csv(recs, path);

        std::ifstream in(path);
        std::string header, row;
        REQUIRE(std::getline(in, header));
        CHECK(header == "time_s,modified_energy,kinetic_energy,blowup_indicator,h1_norm,h2_norm");
        REQUIRE(std::getline(in, row));
        std::string extra;
        CHECK_FALSE(std::getline(in, extra));

        std::stringstream ss(row);
        std::string cell;
        std::vector<double> vals;
        while (std::getline(ss, cell, ',')) vals.push_back(std::stod(cell));
        REQUIRE(vals.size() == 6);
        CHECK(vals[0] == r.time);
        CHECK(vals[1] == r.modified_energy);
        CHECK(vals[2] == r.kinetic_energy);
        CHECK(vals[3] == r.blowup_indicator);
        CHECK(vals[4] == 1.5);
        CHECK(vals[5] == 2.5);
    }
    SUBCASE("optional columns appear when populated") {
        DiagnosticsRecord r;
        r.tau_estimate = 0.04;
        r.mhd_energy = 1.0;
        std::vector<DiagnosticsRecord> recs{r};
        write_csv(recs, path);
        std::ifstream in(path);
        std::string header;
        REQUIRE(std::getline(in, header));
        CHECK(header.find("tau_estimate") != std::string::npos);
        CHECK(header.find("mhd_energy") != std::string::npos);
    }
    SUBCASE("generic table rejects ragged rows") {
        CHECK_THROWS_AS(write_csv_table({"a", "b"}, {{1.0}}, path), FormatError);
    }
    std::remove(path.string().c_str());
}
