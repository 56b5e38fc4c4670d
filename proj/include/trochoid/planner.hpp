#pragma once
/**
 * @file  planner.hpp
 * @brief Moving-goal candidate reduction and the top-level planner.
 *
 * In F^w the goal drifts along -x at Vw. The bearing from the start to the
 * drifting goal sweeps monotonically toward +/-pi, so the Dubins-frame
 * angles alpha(t) and beta(t) cross quadrant boundaries at a handful of
 * transition points along the goal track. Between transitions the quadrant
 * pair is constant, and the decision-table block there bounds the optimal
 * word set; only those words get solved.
 */

#include <optional>
#include <vector>

#include "trochoid/solver.hpp"

namespace trochoid {

/// A goal-track location where alpha(t) or beta(t) changes quadrant.
struct TransitionPoint {
    enum class Source { alpha, beta };
    double r;       ///< m, distance traveled by the goal from x_g^w(0)
    Source source;
    double theta;   ///< bearing at the crossing, in [0, 2pi)
};

enum class Regime {
    reduced,              ///< decision-table block solved
    short_distance_full,  ///< all four words solved
};

struct SegmentChoice {
    double theta_q;  ///< quadrant-lookup bearing, in [0, 2pi); meaningful only when reduced
    Regime regime;
};

/// Signed rotation of theta for the angle psi - theta to reach its next
/// quadrant boundary, measured from theta = 0. Positive rotation when the
/// goal track lies above the start (y_sign = +1), negative below (-1);
/// nullopt when y_sign = 0 (theta never changes).
std::optional<double> calc_delta_theta(double psi, int y_sign);

/// Transition points of alpha(t) and beta(t), ascending in r. At most four;
/// angles directed away from the goal track are skipped.
/// Throws DegeneratePoints for coincident positions.
std::vector<TransitionPoint> calc_transition_points(const Pose& start_w, const Pose& goal_w);

/// Walks the transition segments: rejects the plan into full evaluation when
/// any segment (or the tail) dips to d <= 4R, otherwise returns the bearing
/// of the midpoint of the first segment that brackets the rendezvous, or the
/// tail bisector when none does.
SegmentChoice find_solution_segment(const std::vector<TransitionPoint>& transitions,
                                    const Pose& start_w, const Pose& goal_w, const Wind& wind,
                                    const VehicleLimits& limits);

/// Planner outcome before path sampling: the winning solution in F^w plus
/// the candidate accounting.
struct SolveOutcome {
    TrochoidSolution solution;
    PathWord word;
    std::vector<PathWord> candidates_evaluated;
    int numeric_solves;
    Regime regime;
    std::optional<QuadrantPair> block;  ///< table block consulted, when reduced
    TrochoidProblem problem;
};

/// Reduced planner: wind-frame transform, segment localization, decision
/// table lookup, candidate solves. Throws WindTooStrong, DegeneratePoints,
/// or NoSolution.
SolveOutcome plan_solution(const Pose& start_i, const Pose& goal_i, const Wind& wind,
                           const VehicleLimits& limits);

/// Exhaustive four-word solve of the same problem (the baseline comparator).
SolveOutcome baseline_solution(const Pose& start_i, const Pose& goal_i, const Wind& wind,
                               const VehicleLimits& limits);

struct PlanResult {
    SampledPath best;
    PathWord word;
    double total_time;
    std::vector<PathWord> candidates_evaluated;
    int numeric_solves;
    Regime regime;
};

/// plan_solution plus path sampling at spacing dt.
PlanResult plan(const Pose& start_i, const Pose& goal_i, const Wind& wind,
                const VehicleLimits& limits, double dt);

const char* to_string(Regime r);

}  // namespace trochoid
