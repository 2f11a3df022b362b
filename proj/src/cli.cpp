#include "gardner/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <numbers>
#include <sstream>

#include "gardner/errors.hpp"

namespace gardner::cli {

namespace fs = std::filesystem;

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_number(const std::string& text, const std::string& key) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("'" + key + "' expects a number, got '" + text + "'");
    }
}

std::size_t parse_count(const std::string& text, const std::string& key) {
    const double v = parse_number(text, key);
    if (v < 0.0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
        throw ConfigError("'" + key + "' expects a non-negative integer, got '" + text + "'");
    }
    return static_cast<std::size_t>(v);
}

std::ofstream open_csv(const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + path.string());
    return out;
}

}  // namespace

std::map<std::string, std::string> read_key_value_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::map<std::string, std::string> values;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected key=value");
        }
        values[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return values;
}

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        token = trim(token);
        if (token.empty()) continue;
        out.push_back(parse_number(token, "list"));
    }
    return out;
}

RunConfig run_config_from(const std::map<std::string, std::string>& s) {
    RunConfig c;
    auto get = [&s](const char* key) -> const std::string* {
        const auto it = s.find(key);
        return it == s.end() ? nullptr : &it->second;
    };
    if (auto v = get("scenario")) c.scenario = parse_scenario_name(*v);
    if (auto v = get("basis")) c.basis = parse_basis_kind(*v);
    if (auto v = get("n")) c.n = parse_count(*v, "n");
    if (auto v = get("dt")) c.dt = parse_number(*v, "dt");
    if (auto v = get("t-end")) c.t_end = parse_number(*v, "t-end");
    if (auto v = get("snapshots")) c.snapshot_times = parse_number_list(*v);
    if (auto v = get("epsilon")) c.epsilon_forcing = parse_number(*v, "epsilon");
    if (auto v = get("peak-resolution")) c.peak_resolution = parse_number(*v, "peak-resolution");
    if (auto v = get("out-dir")) c.out_dir = *v;

    const auto cu = get("closure-u");
    const auto cv = get("closure-v");
    if (cu || cv) {
        FieldClosures fc = scenario_config(c.scenario).closures(c.basis);
        if (cu) fc.u = BoundaryClosure::both(parse_closure(*cu));
        if (cv) fc.v = BoundaryClosure::both(parse_closure(*cv));
        c.closures = fc;
    }
    return c;
}

void write_snapshots_csv(const RunReport& report, const fs::path& path) {
    auto out = open_csv(path);
    out << "t,x,u,v\n";
    const auto nodes = report.grid->nodes();
    for (const Snapshot& s : report.snapshots) {
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            out << format_number(s.t) << ',' << format_number(nodes[i]) << ','
                << format_number(s.u[i]) << ',' << format_number(s.v[i]) << '\n';
        }
    }
}

void write_diagnostics_csv(const RunReport& report, const fs::path& path) {
    auto out = open_csv(path);
    out << "t,linf,M,E,H,C_M,C_E,C_H\n";
    for (const DiagnosticRecord& d : report.diagnostics) {
        out << format_number(d.t) << ',' << (d.linf ? format_number(*d.linf) : std::string()) << ','
            << format_number(d.conserved.m) << ',' << format_number(d.conserved.e) << ','
            << format_number(d.conserved.ham) << ',' << format_number(d.changes.m) << ','
            << format_number(d.changes.e) << ',' << format_number(d.changes.ham) << '\n';
    }
}

void write_peaks_csv(const RunReport& report, const fs::path& path) {
    auto out = open_csv(path);
    out << "t,peak_index,x,height\n";
    for (const PeakRecord& r : report.peaks) {
        for (std::size_t k = 0; k < r.peaks.size(); ++k) {
            out << format_number(r.t) << ',' << k << ',' << format_number(r.peaks[k].x) << ','
                << format_number(r.peaks[k].height) << '\n';
        }
    }
}

void write_stability_csv(const std::vector<StabilityPoint>& points, const fs::path& path) {
    auto out = open_csv(path);
    out << "phi,eps,dt,h,basis,rho_momentum,rho_constraint\n";
    for (const StabilityPoint& p : points) {
        out << format_number(p.phi) << ',' << format_number(p.eps) << ',' << format_number(p.dt)
            << ',' << format_number(p.h) << ',' << to_string(p.basis) << ','
            << format_number(p.rho_momentum) << ',' << format_number(p.rho_constraint) << '\n';
    }
}

namespace {

/// String-valued flags of one subcommand, merged with a config file after parsing.
class Settings {
public:
    Settings(CLI::App& app, std::vector<std::pair<std::string, std::string>> flags) {
        for (auto& [name, help] : flags) {
            auto& slot = raw_[name];
            options_[name] = app.add_option("--" + name, slot, help);
        }
        app.add_option("--config", config_file_, "key=value file (flags take precedence)");
    }

    /// defaults < GARDNER_OUT_DIR < config file < command line
    std::map<std::string, std::string> merged() const {
        std::map<std::string, std::string> out;
        if (options_.count("out-dir")) {
            if (const char* env = std::getenv("GARDNER_OUT_DIR"); env && *env) {
                out["out-dir"] = env;
            }
        }
        if (!config_file_.empty()) {
            for (auto& [key, value] : read_key_value_file(config_file_)) {
                if (!options_.count(key)) throw ConfigError("unknown config key '" + key + "'");
                out[key] = value;
            }
        }
        for (auto& [name, opt] : options_) {
            if (opt->count() > 0) out[name] = raw_.at(name);
        }
        return out;
    }

private:
    std::map<std::string, std::string> raw_;
    std::map<std::string, CLI::Option*> options_;
    std::string config_file_;
};

const std::vector<std::pair<std::string, std::string>> kRunFlags = {
    {"scenario", "bell | kink | generation | interaction"},
    {"basis", "polynomial | trigonometric"},
    {"n", "number of subintervals"},
    {"dt", "time step"},
    {"t-end", "final time"},
    {"snapshots", "comma-separated recording times"},
    {"closure-u", "neumann1 | neumann2 for u at both ends"},
    {"closure-v", "neumann1 | neumann2 for v at both ends"},
    {"epsilon", "constant forcing on the right-hand side"},
    {"out-dir", "output directory (fallback: GARDNER_OUT_DIR, then .)"},
    {"peak-resolution", "peak search lattice spacing (default h/10)"},
};

fs::path out_dir_of(const RunConfig& c) { return fs::path(c.out_dir.empty() ? "." : c.out_dir); }

void print_summary(const RunReport& r, std::ostream& os) {
    os << to_string(r.run.scenario.name) << " / " << to_string(r.run.basis) << "  N=" << r.run.n
       << " dt=" << format_number(r.run.params.dt) << " t_end=" << format_number(r.run.t_end)
       << "\n";
    for (const auto& d : r.diagnostics) {
        os << "  t=" << format_number(d.t);
        if (d.linf) os << "  Linf=" << format_number(*d.linf);
        os << "  C(M)=" << format_number(d.changes.m) << "  C(E)=" << format_number(d.changes.e)
           << "  C(H)=" << format_number(d.changes.ham) << "\n";
    }
}

int finish_run(const RunReport& report, std::ostream& err) {
    if (!report.complete) {
        err << "numerical failure: " << report.failure << " (partial output written)\n";
        return kNumerical;
    }
    return kOk;
}

int do_run(const std::map<std::string, std::string>& settings) {
    const RunConfig config = run_config_from(settings);
    const RunReport report = run(config);
    const fs::path dir = out_dir_of(config);
    write_snapshots_csv(report, dir / "snapshots.csv");
    write_diagnostics_csv(report, dir / "diagnostics.csv");
    write_peaks_csv(report, dir / "peaks.csv");
    print_summary(report, std::cout);
    return finish_run(report, std::cerr);
}

int do_peaks(const std::map<std::string, std::string>& settings, double interval) {
    RunConfig config = run_config_from(settings);
    const ResolvedRun base = resolve(config);
    if (!(interval > 0.0)) throw ConfigError("interval must be positive");
    std::vector<double> times;
    for (double t = interval; t <= base.t_end + 1e-9; t += interval) {
        times.push_back(std::round(t / base.params.dt) * base.params.dt);
    }
    config.snapshot_times = times;
    const RunReport report = run(config);
    write_peaks_csv(report, out_dir_of(config) / "peaks.csv");
    for (const auto& rec : report.peaks) {
        std::cout << "t=" << format_number(rec.t);
        for (const auto& p : rec.peaks) {
            std::cout << "  (" << format_number(p.x) << ", " << format_number(p.height) << ")";
        }
        std::cout << "\n";
    }
    return finish_run(report, std::cerr);
}

int do_table(const std::map<std::string, std::string>& settings, const std::string& n_list) {
    const RunConfig base = run_config_from(settings);
    std::vector<std::size_t> ns;
    for (double v : parse_number_list(n_list)) {
        if (v < 8 || v != static_cast<double>(static_cast<std::size_t>(v))) {
            throw ConfigError("n list entries must be integers >= 8");
        }
        ns.push_back(static_cast<std::size_t>(v));
    }
    if (ns.empty()) throw ConfigError("table needs at least one N");

    std::vector<std::future<RunReport>> jobs;
    for (std::size_t n : ns) {
        RunConfig c = base;
        c.n = n;
        jobs.push_back(std::async(std::launch::async, [c] { return run(c); }));
    }
    std::vector<RunReport> reports;
    for (auto& j : jobs) reports.push_back(j.get());

    const fs::path dir = out_dir_of(base);
    const bool analytic = reports.front().run.scenario.analytic.has_value();
    if (analytic) {
        auto out = open_csv(dir / "table_errors.csv");
        out << "n,t,linf\n";
        for (const auto& r : reports) {
            for (const auto& d : r.diagnostics) {
                if (d.t == 0.0) continue;
                out << r.run.n << ',' << format_number(d.t) << ',' << format_number(*d.linf) << '\n';
            }
        }
    }
    {
        auto out = open_csv(dir / "table_conservation.csv");
        out << "n,t,C_M,C_E,C_H\n";
        for (const auto& r : reports) {
            for (const auto& d : r.diagnostics) {
                if (d.t == 0.0) continue;
                out << r.run.n << ',' << format_number(d.t) << ',' << format_number(d.changes.m)
                    << ',' << format_number(d.changes.e) << ',' << format_number(d.changes.ham)
                    << '\n';
            }
        }
    }
    int status = kOk;
    for (const auto& r : reports) {
        print_summary(r, std::cout);
        if (finish_run(r, std::cerr) != kOk) status = kNumerical;
    }
    return status;
}

struct StabilityArgs {
    std::string basis = "both";
    std::size_t phi_points = 64;
    std::string eps = "0,0.25,0.5,0.75,1,1.25,1.5,1.75,2";
    std::string dts = "0.01,0.1";
    std::string hs = "0.1,0.5";
    double mu = 1.0;
    std::string out_dir;
};

int do_stability(const StabilityArgs& a, bool out_dir_given) {
    SweepGrid grid;
    for (std::size_t k = 0; k < a.phi_points; ++k) {
        grid.phis.push_back(2.0 * std::numbers::pi * static_cast<double>(k + 1) /
                            static_cast<double>(a.phi_points + 1));
    }
    grid.eps = parse_number_list(a.eps);
    grid.dts = parse_number_list(a.dts);
    grid.hs = parse_number_list(a.hs);
    grid.mu = a.mu;

    std::vector<BasisKind> kinds;
    if (a.basis == "both") {
        kinds = {BasisKind::Polynomial, BasisKind::Trigonometric};
    } else {
        kinds = {parse_basis_kind(a.basis)};
    }
    std::vector<StabilityPoint> all;
    std::size_t violations = 0;
    for (BasisKind k : kinds) {
        const StabilityReport r = stability_sweep(grid, k);
        std::cout << to_string(k) << ": max|rho_momentum|=" << format_number(r.max_rho_momentum)
                  << " max|rho_constraint|=" << format_number(r.max_rho_constraint)
                  << " coupled spectral radius=" << format_number(r.max_coupled)
                  << " violations=" << r.violations.size() << "\n";
        violations += r.violations.size();
        all.insert(all.end(), r.points.begin(), r.points.end());
    }
    std::string dir = a.out_dir;
    if (!out_dir_given) {
        const char* env = std::getenv("GARDNER_OUT_DIR");
        dir = env && *env ? env : ".";
    }
    write_stability_csv(all, fs::path(dir) / "stability.csv");
    return violations == 0 ? kOk : kNumerical;
}

}  // namespace

int main(const std::vector<std::string>& args) {
    CLI::App app{"Gardner equation solver: cubic B-spline collocation with Crank-Nicolson stepping"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "one simulation -> snapshots.csv, diagnostics.csv, peaks.csv");
    Settings run_settings(*run_cmd, kRunFlags);

    auto* table_cmd = app.add_subcommand("table", "sweep N -> table_errors.csv, table_conservation.csv");
    auto table_flags = kRunFlags;
    std::erase_if(table_flags, [](const auto& f) { return f.first == "n"; });
    Settings table_settings(*table_cmd, table_flags);
    std::string n_list = "100,200,400";
    table_cmd->add_option("--n", n_list, "comma-separated list of N");

    auto* peaks_cmd = app.add_subcommand("peaks", "peak positions and heights over time -> peaks.csv");
    Settings peaks_settings(*peaks_cmd, kRunFlags);
    double interval = 0.5;
    peaks_cmd->add_option("--interval", interval, "time between peak records");

    auto* stab_cmd = app.add_subcommand("stability", "Von Neumann sweep -> stability.csv");
    StabilityArgs stab;
    stab_cmd->add_option("--basis", stab.basis, "polynomial | trigonometric | both");
    stab_cmd->add_option("--phi-points", stab.phi_points, "angles in (0, 2 pi)");
    stab_cmd->add_option("--eps", stab.eps, "frozen coefficient values");
    stab_cmd->add_option("--dt", stab.dts, "time steps");
    stab_cmd->add_option("--spacing", stab.hs, "grid spacings h");
    stab_cmd->add_option("--mu", stab.mu, "dispersion coefficient");
    auto* stab_out = stab_cmd->add_option("--out-dir", stab.out_dir, "output directory");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*run_cmd) return do_run(run_settings.merged());
        if (*table_cmd) return do_table(table_settings.merged(), n_list);
        if (*peaks_cmd) return do_peaks(peaks_settings.merged(), interval);
        if (*stab_cmd) return do_stability(stab, stab_out->count() > 0);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfig;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfig;
    } catch (const Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kNumerical;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfig;
    }
    return kUsage;
}

}  // namespace gardner::cli
