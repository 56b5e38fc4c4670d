#pragma once
/**
 * @file  bench.hpp
 * @brief Monte-Carlo benchmark of the reduced planner against the
 *        exhaustive four-word baseline.
 */

#include <array>
#include <cstdint>

#include "trochoid/planner.hpp"

namespace trochoid {

/// Sampling configuration. Defaults mirror the benchmark protocol:
/// positions uniform in [-range, range]^2, headings and wind direction in
/// [0, 2pi), wind speed in [wind_min, wind_max] m/s, max turn rate uniform
/// so that the turning radius spans [radius_min, radius_max] m, fixed
/// airspeed.
struct BenchConfig {
    int n_samples = 10000;
    double position_range = 1000.0;
    double wind_min = 1.0;
    double wind_max = 15.0;
    double radius_min = 10.0;
    double radius_max = 1000.0;
    double airspeed = 20.0;
    std::uint64_t seed = 0;
    double dt = 0.1;

    void validate() const;
};

struct BenchReport {
    int n_samples;
    std::uint64_t seed;
    std::array<double, 4> word_distribution;    ///< fraction per PathWord, sums to 1
    std::array<double, 16> block_distribution;  ///< fraction per a_lm over the d > 4R subset
    double pct_d_gt_4r;         ///< fraction solved in the reduced regime (segment d > 4R held)
    double mean_numeric_solves;  ///< reduced planner, d > 4R subset
    double mean_candidates;      ///< reduced planner, d > 4R subset
    double mean_time_reduced;    ///< s per query, solve stage only
    double mean_time_baseline;   ///< s per query, solve stage only
    int mismatches;  ///< reduced vs baseline total-time disagreements > 1e-6 relative
    int n_d_gt_4r;
};

/// Exhaustive comparator: always solves all four words (two analytic, two
/// numeric) and keeps the fastest.
PlanResult baseline_plan(const Pose& start_i, const Pose& goal_i, const Wind& wind,
                         const VehicleLimits& limits, double dt);

/// Runs the Monte-Carlo comparison. Deterministic for a fixed seed except
/// for the wall-clock fields; the timing pass re-solves every sample
/// single-threaded.
BenchReport run_bench(const BenchConfig& cfg);

}  // namespace trochoid
