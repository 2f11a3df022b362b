#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gardner/cli.hpp"
#include "gardner/errors.hpp"

using namespace gardner;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("gardner_cli_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const fs::path& p) {
    std::vector<std::string> out;
    std::ifstream in(p);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

int invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "gardner");
    return cli::main(args);
}

}  // namespace

TEST_CASE("number formatting") {
    CHECK(cli::format_number(0.1) == "0.1");
    CHECK(cli::format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(cli::format_number(5.2261e-5) == "5.2261e-05");
    CHECK(cli::format_number(16.0) == "16");
}

TEST_CASE("number lists") {
    CHECK(cli::parse_number_list("1,2.5, 4") == std::vector<double>{1.0, 2.5, 4.0});
    CHECK(cli::parse_number_list("").empty());
    CHECK_THROWS_AS((void)cli::parse_number_list("1,x"), ConfigError);
}

TEST_CASE("settings map onto a run") {
    const RunConfig c = cli::run_config_from({{"scenario", "kink"},
                                              {"basis", "trig"},
                                              {"n", "200"},
                                              {"snapshots", "4,8"},
                                              {"closure-u", "n1"}});
    CHECK(c.scenario == ScenarioName::Kink);
    CHECK(c.basis == BasisKind::Trigonometric);
    CHECK(*c.n == 200);
    CHECK(*c.snapshot_times == std::vector<double>{4.0, 8.0});
    REQUIRE(c.closures.has_value());
    CHECK(c.closures->u.left == Closure::Neumann1);
    CHECK_THROWS_AS((void)cli::run_config_from({{"n", "ten"}}), ConfigError);
    CHECK_THROWS_AS((void)cli::run_config_from({{"scenario", "breather"}}), ConfigError);
}

TEST_CASE("run writes three tables with fixed headers") {
    const fs::path dir = scratch("run");
    REQUIRE(invoke({"run", "--t-end", "1", "--out-dir", dir.string()}) == cli::kOk);
    const auto snaps = lines(dir / "snapshots.csv");
    CHECK(snaps.front() == "t,x,u,v");
    CHECK(snaps.size() == 1 + 2 * 101);
    CHECK(lines(dir / "diagnostics.csv").front() == "t,linf,M,E,H,C_M,C_E,C_H");
    CHECK(lines(dir / "peaks.csv").front() == "t,peak_index,x,height");
}

TEST_CASE("identical invocations give identical bytes") {
    const fs::path a = scratch("det_a"), b = scratch("det_b");
    REQUIRE(invoke({"run", "--t-end", "1", "--basis", "trig", "--out-dir", a.string()}) == cli::kOk);
    REQUIRE(invoke({"run", "--t-end", "1", "--basis", "trig", "--out-dir", b.string()}) == cli::kOk);
    for (const char* f : {"snapshots.csv", "diagnostics.csv", "peaks.csv"}) {
        CHECK(slurp(a / f) == slurp(b / f));
    }
}

TEST_CASE("zero horizon writes the initial profile only") {
    const fs::path dir = scratch("t0");
    REQUIRE(invoke({"run", "--t-end", "0", "--out-dir", dir.string()}) == cli::kOk);
    const auto snaps = lines(dir / "snapshots.csv");
    CHECK(snaps.size() == 102);
    CHECK(snaps[1].rfind("0,-20,", 0) == 0);
    CHECK(lines(dir / "diagnostics.csv").size() == 2);
}

TEST_CASE("flags override the config file, which overrides the environment") {
    const fs::path dir = scratch("cfg"), env_dir = scratch("cfg_env");
    {
        std::ofstream cfg(dir / "run.cfg");
        cfg << "# quick run\nn = 40\nt-end = 0\nout-dir = " << dir.string() << "\n";
    }
    ::setenv("GARDNER_OUT_DIR", env_dir.string().c_str(), 1);
    REQUIRE(invoke({"run", "--config", (dir / "run.cfg").string(), "--n", "20"}) == cli::kOk);
    CHECK(lines(dir / "snapshots.csv").size() == 22);
    CHECK_FALSE(fs::exists(env_dir / "snapshots.csv"));

    {
        std::ofstream cfg(dir / "noout.cfg");
        cfg << "n = 16\nt-end = 0\n";
    }
    REQUIRE(invoke({"run", "--config", (dir / "noout.cfg").string()}) == cli::kOk);
    CHECK(lines(env_dir / "snapshots.csv").size() == 18);
    ::unsetenv("GARDNER_OUT_DIR");

    {
        std::ofstream cfg(dir / "bad.cfg");
        cfg << "colour = red\n";
    }
    CHECK(invoke({"run", "--config", (dir / "bad.cfg").string()}) == cli::kConfig);
    {
        std::ofstream cfg(dir / "broken.cfg");
        cfg << "just words\n";
    }
    CHECK_THROWS_AS((void)cli::read_key_value_file(dir / "broken.cfg"), ConfigError);
    CHECK_THROWS_AS((void)cli::read_key_value_file(dir / "missing.cfg"), ConfigError);
}

TEST_CASE("exit codes") {
    const fs::path dir = scratch("codes");
    CHECK(invoke({"run", "--no-such-flag"}) == cli::kUsage);
    CHECK(invoke({}) == cli::kUsage);
    CHECK(invoke({"run", "--scenario", "breather", "--out-dir", dir.string()}) == cli::kConfig);
    CHECK(invoke({"run", "--n", "4", "--out-dir", dir.string()}) == cli::kConfig);
    CHECK(invoke({"run", "--epsilon", "nan", "--t-end", "1", "--out-dir", dir.string()}) ==
          cli::kNumerical);
    // partial output survives the failure
    CHECK(fs::exists(dir / "diagnostics.csv"));
}

TEST_CASE("table sweep") {
    const fs::path dir = scratch("table");
    REQUIRE(invoke({"table", "--scenario", "bell", "--n", "50,100", "--out-dir", dir.string()}) ==
            cli::kOk);
    const auto err = lines(dir / "table_errors.csv");
    CHECK(err.front() == "n,t,linf");
    CHECK(lines(dir / "table_conservation.csv").front() == "n,t,C_M,C_E,C_H");
    // rows for both N at t = 2.5 and 5
    CHECK(err.size() == 1 + 2 * 2);
}

TEST_CASE("peaks and stability subcommands") {
    const fs::path dir = scratch("sub");
    REQUIRE(invoke({"peaks", "--t-end", "1", "--interval", "0.5", "--out-dir", dir.string()}) ==
            cli::kOk);
    const auto peaks = lines(dir / "peaks.csv");
    CHECK(peaks.size() == 1 + 3);
    CHECK(invoke({"peaks", "--interval", "0", "--out-dir", dir.string()}) == cli::kConfig);

    REQUIRE(invoke({"stability", "--basis", "both", "--phi-points", "8", "--out-dir", dir.string()}) ==
            cli::kOk);
    const auto stab = lines(dir / "stability.csv");
    CHECK(stab.front() == "phi,eps,dt,h,basis,rho_momentum,rho_constraint");
    CHECK(stab.size() == 1 + 2 * 8 * 9 * 2 * 2);
}

TEST_CASE("installed executable") {
    const fs::path dir = scratch("exe");
    const std::string cmd = std::string(GARDNER_CLI_PATH) + " run --t-end 0 --out-dir " +
                            dir.string() + " > /dev/null";
    CHECK(std::system(cmd.c_str()) == 0);
    CHECK(fs::exists(dir / "snapshots.csv"));
}
