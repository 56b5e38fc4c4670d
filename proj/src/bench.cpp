#include "trochoid/bench.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace trochoid {

namespace {

struct Sample {
    Pose start;
    Pose goal;
    Wind wind;
    double radius;
};

// Sampling order per sample: x_s, y_s, x_g, y_g, psi_s, psi_g, psi_w, V_w,
// psi_dot_max. The turn rate is the uniform variable; the turning radius
// R0 = Va / psi_dot_max then spans [radius_min, radius_max].
std::vector<Sample> draw_samples(const BenchConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> pos(-cfg.position_range, cfg.position_range);
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    std::uniform_real_distribution<double> wind_speed(cfg.wind_min, cfg.wind_max);
    std::uniform_real_distribution<double> turn_rate(cfg.airspeed / cfg.radius_max,
                                                     cfg.airspeed / cfg.radius_min);

    std::vector<Sample> samples;
    samples.reserve(cfg.n_samples);
    for (int i = 0; i < cfg.n_samples; ++i) {
        const double xs = pos(rng), ys = pos(rng), xg = pos(rng), yg = pos(rng);
        const double psi_s = ang(rng), psi_g = ang(rng), psi_w = ang(rng);
        const double vw = wind_speed(rng);
        const double omega = turn_rate(rng);
        samples.push_back({Pose{xs, ys, psi_s}, Pose{xg, yg, psi_g},
                           Wind{vw * std::cos(psi_w), vw * std::sin(psi_w)},
                           cfg.airspeed / omega});
    }
    return samples;
}

VehicleLimits limits_for(const BenchConfig& cfg, const Sample& s) {
    return {cfg.airspeed, cfg.airspeed / s.radius};
}

template <typename Solve>
double mean_solve_seconds(const std::vector<Sample>& samples, const BenchConfig& cfg,
                          Solve&& solve) {
    const auto start = std::chrono::steady_clock::now();
    for (const Sample& s : samples)
        solve(s, limits_for(cfg, s));
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count() / samples.size();
}

}  // namespace

void BenchConfig::validate() const {
    if (n_samples < 1)
        throw std::invalid_argument("bench: n_samples must be >= 1");
    if (!(position_range > 0.0))
        throw std::invalid_argument("bench: position_range must be positive");
    if (!(wind_min <= wind_max) || wind_min < 0.0)
        throw std::invalid_argument("bench: wind range is empty or negative");
    if (!(radius_min <= radius_max) || !(radius_min > 0.0))
        throw std::invalid_argument("bench: radius range is empty or non-positive");
    if (!(airspeed > wind_max))
        throw std::invalid_argument("bench: airspeed must exceed the maximum wind speed");
    if (!(dt > 0.0))
        throw std::invalid_argument("bench: dt must be positive");
}

PlanResult baseline_plan(const Pose& start_i, const Pose& goal_i, const Wind& wind,
                         const VehicleLimits& limits, double dt) {
    SolveOutcome outcome = baseline_solution(start_i, goal_i, wind, limits);
    SampledPath path =
        construct_path(outcome.solution, outcome.problem, dt, start_i.z, goal_i.z, wind);
    return {std::move(path), outcome.word, outcome.solution.total_time,
            std::move(outcome.candidates_evaluated), outcome.numeric_solves, outcome.regime};
}

BenchReport run_bench(const BenchConfig& cfg) {
    cfg.validate();
    const std::vector<Sample> samples = draw_samples(cfg);

    BenchReport report{};
    report.n_samples = cfg.n_samples;
    report.seed = cfg.seed;

    std::array<int, 4> word_counts{};
    std::array<int, 16> block_counts{};
    long long numeric_solves = 0;
    long long candidates = 0;

    for (const Sample& s : samples) {
        const VehicleLimits limits = limits_for(cfg, s);
        const SolveOutcome reduced = plan_solution(s.start, s.goal, s.wind, limits);
        const SolveOutcome baseline = baseline_solution(s.start, s.goal, s.wind, limits);

        ++word_counts[static_cast<int>(reduced.word)];
        const double rel = std::abs(reduced.solution.total_time - baseline.solution.total_time) /
                           baseline.solution.total_time;
        if (rel > 1e-6)
            ++report.mismatches;

        // The d > 4R subset: queries whose solution segment passed the 4R
        // check, i.e. the reduced regime applied.
        if (reduced.block) {
            ++report.n_d_gt_4r;
            numeric_solves += reduced.numeric_solves;
            candidates += static_cast<long long>(reduced.candidates_evaluated.size());
            ++block_counts[4 * (reduced.block->l - 1) + (reduced.block->m - 1)];
        }
    }

    for (int i = 0; i < 4; ++i)
        report.word_distribution[i] = static_cast<double>(word_counts[i]) / cfg.n_samples;
    for (int i = 0; i < 16; ++i)
        report.block_distribution[i] =
            report.n_d_gt_4r > 0 ? static_cast<double>(block_counts[i]) / report.n_d_gt_4r : 0.0;
    report.pct_d_gt_4r = static_cast<double>(report.n_d_gt_4r) / cfg.n_samples;
    report.mean_numeric_solves =
        report.n_d_gt_4r > 0 ? static_cast<double>(numeric_solves) / report.n_d_gt_4r : 0.0;
    report.mean_candidates =
        report.n_d_gt_4r > 0 ? static_cast<double>(candidates) / report.n_d_gt_4r : 0.0;

    report.mean_time_reduced = mean_solve_seconds(
        samples, cfg,
        [](const Sample& s, const VehicleLimits& l) { plan_solution(s.start, s.goal, s.wind, l); });
    report.mean_time_baseline =
        mean_solve_seconds(samples, cfg, [](const Sample& s, const VehicleLimits& l) {
            baseline_solution(s.start, s.goal, s.wind, l);
        });
    return report;
}

}  // namespace trochoid
