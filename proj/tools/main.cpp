// Command line front end: single-query planning with path export, the
// Monte-Carlo benchmark, decision-table validation, and a reduced-vs-baseline
// oracle check on one instance.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trochoid/io.hpp"

namespace {

using namespace trochoid;

struct PoseArgs {
    std::vector<double> start;  // x,y,z,psi
    std::vector<double> goal;
    std::vector<double> wind;  // wx,wy
    double airspeed = 20.0;
    double max_turn_rate = 0.0;
    double dt = 0.1;
};

void add_pose_options(CLI::App* cmd, PoseArgs& args) {
    cmd->add_option("--start", args.start, "start pose x,y,z,psi (m, m, m, rad)")
        ->required()
        ->delimiter(',')
        ->expected(4);
    cmd->add_option("--goal", args.goal, "goal pose x,y,z,psi")
        ->required()
        ->delimiter(',')
        ->expected(4);
    cmd->add_option("--wind", args.wind, "wind vector wx,wy (m/s)")
        ->required()
        ->delimiter(',')
        ->expected(2);
    cmd->add_option("--airspeed", args.airspeed, "airspeed Va (m/s)")->capture_default_str();
    cmd->add_option("--max-turn-rate", args.max_turn_rate, "max turn rate (rad/s)")->required();
    cmd->add_option("--dt", args.dt, "sample spacing (s)")->capture_default_str();
}

Pose pose_of(const std::vector<double>& v) {
    return {v[0], v[1], v[2], v[3]};
}

void print_summary(const char* label, const PlanResult& r) {
    std::cout << label << ": word=" << to_string(r.word) << " time=" << r.total_time
              << " s candidates=[";
    for (std::size_t i = 0; i < r.candidates_evaluated.size(); ++i)
        std::cout << (i ? "," : "") << to_string(r.candidates_evaluated[i]);
    std::cout << "] numeric_solves=" << r.numeric_solves << " regime=" << to_string(r.regime)
              << "\n";
}

// key = value lines; '#' starts a comment. Keys mirror the long flag names.
std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot read config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (!key.empty())
            kv[key] = val;
    }
    return kv;
}

bool write_file(const std::string& name, const std::string& body) {
    std::ofstream out(name);
    if (!out) {
        std::cerr << "cannot open " << name << " for writing\n";
        return false;
    }
    out << body;
    return true;
}

int run_plan(const PoseArgs& args, const std::string& csv_out, const std::string& json_out) {
    const VehicleLimits limits(args.airspeed, args.max_turn_rate);
    const Wind wind{args.wind[0], args.wind[1]};
    const PlanResult result = plan(pose_of(args.start), pose_of(args.goal), wind, limits, args.dt);
    print_summary("plan", result);
    if (!csv_out.empty()) {
        std::ofstream out(csv_out);
        if (!out) {
            std::cerr << "cannot open " << csv_out << " for writing\n";
            return 1;
        }
        write_csv(result.best, out);
    }
    if (!json_out.empty() && !write_file(json_out, to_json(result).dump(2) + "\n"))
        return 1;
    return 0;
}

int run_oracle(const PoseArgs& args) {
    const VehicleLimits limits(args.airspeed, args.max_turn_rate);
    const Wind wind{args.wind[0], args.wind[1]};
    const Pose start = pose_of(args.start);
    const Pose goal = pose_of(args.goal);
    const PlanResult reduced = plan(start, goal, wind, limits, args.dt);
    const PlanResult baseline = baseline_plan(start, goal, wind, limits, args.dt);
    print_summary("reduced ", reduced);
    print_summary("baseline", baseline);
    const double rel =
        std::abs(reduced.total_time - baseline.total_time) / baseline.total_time;
    std::cout << "relative time difference: " << rel << (rel <= 1e-6 ? " (match)" : " (MISMATCH)")
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-optimal turn-rate-constrained paths in uniform wind"};
    app.require_subcommand(1);

    PoseArgs plan_args;
    std::string csv_out, json_out;
    CLI::App* plan_cmd = app.add_subcommand("plan", "solve one query and export the path");
    add_pose_options(plan_cmd, plan_args);
    plan_cmd->add_option("--out", csv_out, "write the sampled path as CSV");
    plan_cmd->add_option("--json", json_out, "write the plan result as JSON");

    BenchConfig cfg;
    std::string report_out, config_path;
    CLI::App* bench_cmd = app.add_subcommand("bench", "Monte-Carlo reduced-vs-baseline benchmark");
    std::map<std::string, CLI::Option*> bench_opts;
    bench_opts["n"] = bench_cmd->add_option("--n", cfg.n_samples, "number of samples")
                          ->capture_default_str();
    bench_opts["seed"] = bench_cmd->add_option("--seed", cfg.seed, "RNG seed")
                             ->capture_default_str();
    bench_opts["position-range"] =
        bench_cmd->add_option("--position-range", cfg.position_range,
                              "positions uniform in [-v, v]")
            ->capture_default_str();
    bench_opts["wind-min"] = bench_cmd->add_option("--wind-min", cfg.wind_min,
                                                   "minimum wind speed")
                                 ->capture_default_str();
    bench_opts["wind-max"] = bench_cmd->add_option("--wind-max", cfg.wind_max,
                                                   "maximum wind speed")
                                 ->capture_default_str();
    bench_opts["radius-min"] = bench_cmd->add_option("--radius-min", cfg.radius_min,
                                                     "minimum turning radius")
                                   ->capture_default_str();
    bench_opts["radius-max"] = bench_cmd->add_option("--radius-max", cfg.radius_max,
                                                     "maximum turning radius")
                                   ->capture_default_str();
    bench_opts["airspeed"] = bench_cmd->add_option("--airspeed", cfg.airspeed, "airspeed Va")
                                 ->capture_default_str();
    bench_opts["dt"] = bench_cmd->add_option("--dt", cfg.dt,
                                             "sample spacing (unused by the solve stage)")
                           ->capture_default_str();
    bench_cmd->add_option("--report", report_out, "write the report as JSON");
    bench_cmd->add_option("--config", config_path, "read options from a key = value file");

    double table_d = 4.01;
    int grid_n = 200;
    bool uncorrected = false;
    bool no_regions = false;
    std::string table_out;
    CLI::App* table_cmd =
        app.add_subcommand("validate-table", "grid-check the decision table against the oracle");
    table_cmd->add_option("--d", table_d, "radius-normalized distance")->capture_default_str();
    table_cmd->add_option("--grid-n", grid_n, "samples per axis per block")->capture_default_str();
    table_cmd->add_flag("--uncorrected", uncorrected, "use the original (pre-correction) table");
    table_cmd->add_flag("--no-regions", no_regions, "omit the per-block region maps");
    table_cmd->add_option("--out", table_out, "write the report to a file instead of stdout");

    PoseArgs oracle_args;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "run the reduced and baseline planners on one instance");
    add_pose_options(oracle_cmd, oracle_args);

    try {
        app.parse(argc, argv);
        if (*plan_cmd)
            return run_plan(plan_args, csv_out, json_out);
        if (*bench_cmd) {
            if (!config_path.empty()) {
                // command line flags win over config file entries
                for (const auto& [key, value] : read_config(config_path)) {
                    const auto it = bench_opts.find(key);
                    if (it == bench_opts.end())
                        throw std::invalid_argument("unknown config key: " + key);
                    if (it->second->count() == 0) {
                        it->second->clear();
                        it->second->add_result(value);
                        it->second->run_callback();
                    }
                }
            }
            const BenchReport report = run_bench(cfg);
            const std::string body = to_json(report).dump(2) + "\n";
            if (!report_out.empty())
                return write_file(report_out, body) ? 0 : 1;
            std::cout << body;
            return 0;
        }
        if (*table_cmd) {
            const TableReport report = validate_table(table_d, grid_n, !uncorrected);
            const std::string body = to_json(report, !no_regions).dump(2) + "\n";
            if (!table_out.empty())
                return write_file(table_out, body) ? 0 : 1;
            std::cout << body;
            return 0;
        }
        if (*oracle_cmd)
            return run_oracle(oracle_args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const WindTooStrong& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const DegeneratePoints& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const NoSolution& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
