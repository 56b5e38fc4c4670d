#include "trochoid/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace trochoid {

namespace {

constexpr double kZeroWindTol = 1e-9;    // m/s, below this the goal is static
constexpr double kWindMargin = 1e-6;     // m/s, required airspeed excess
constexpr double kCoincidentTol = 1e-9;  // m

// Distance from the start to the goal track at drift distance r.
double track_distance(const Pose& start_w, const Pose& goal_w, double r) {
    return std::hypot(goal_w.x - r - start_w.x, goal_w.y - start_w.y);
}

// Minimum start-to-goal distance over the track segment r in [r_lo, r_hi]:
// both endpoints plus the perpendicular foot when it falls inside. The
// decision table assumes d > 4R over the whole segment, not just at its far
// end.
double segment_min_distance(const Pose& start_w, const Pose& goal_w, double r_lo, double r_hi) {
    double m = std::min(track_distance(start_w, goal_w, r_lo),
                        track_distance(start_w, goal_w, r_hi));
    const double r_foot = goal_w.x - start_w.x;
    if (r_foot >= r_lo && r_foot <= r_hi)
        m = std::min(m, std::abs(goal_w.y - start_w.y));
    return m;
}

// Same check over the open-ended tail [r_lo, inf); the distance grows
// without bound, so only the near end and the foot matter.
double tail_min_distance(const Pose& start_w, const Pose& goal_w, double r_lo) {
    double m = track_distance(start_w, goal_w, r_lo);
    if (goal_w.x - start_w.x >= r_lo)
        m = std::min(m, std::abs(goal_w.y - start_w.y));
    return m;
}

int y_offset_sign(const Pose& start_w, const Pose& goal_w) {
    const double dy = goal_w.y - start_w.y;
    if (dy > 0.0)
        return 1;
    if (dy < 0.0)
        return -1;
    return 0;
}

// Bearing in atan2 range (-pi, pi]; theta(t) sweeps from here toward
// sign(dy) * pi as the goal drifts.
double raw_bearing(const Pose& start_w, const Pose& goal_w, double r) {
    return std::atan2(goal_w.y - start_w.y, goal_w.x - r - start_w.x);
}

SolveOutcome solve_candidates(const TrochoidProblem& problem,
                              const std::vector<PathWord>& candidates, Regime regime,
                              std::optional<QuadrantPair> block = std::nullopt) {
    int numeric_solves = 0;
    std::optional<TrochoidSolution> best;
    for (PathWord w : candidates) {
        if (w == PathWord::LSR || w == PathWord::RSL)
            ++numeric_solves;
        if (const auto m = min_time(solve_word(problem, w)))
            if (!best || m->total_time < best->total_time)
                best = *m;
    }
    if (!best)
        throw NoSolution("no candidate trajectory is feasible");
    return {*best, best->word, candidates, numeric_solves, regime, block, problem};
}

std::vector<PathWord> all_words() {
    return {kAllWords.begin(), kAllWords.end()};
}

TrochoidProblem make_problem(const Pose& start_i, const Pose& goal_i, const Wind& wind,
                             const VehicleLimits& limits) {
    if (!(limits.airspeed > wind.speed() + kWindMargin))
        throw WindTooStrong("wind exceeds airspeed");
    const Pose start_w = to_wind_frame(start_i, wind);
    const Pose goal_w = to_wind_frame(goal_i, wind);
    if (std::hypot(goal_w.x - start_w.x, goal_w.y - start_w.y) < kCoincidentTol)
        throw DegeneratePoints("plan: start and goal positions coincide");
    return {start_w, goal_w, wind.speed(), limits};
}

}  // namespace

const char* to_string(Regime r) {
    return r == Regime::reduced ? "reduced" : "short_distance_full";
}

std::optional<double> calc_delta_theta(double psi, int y_sign) {
    if (y_sign == 0)
        return std::nullopt;
    const double angle = mod2pi(psi);  // alpha(0) when theta(0) = 0
    const double into_quadrant = angle - kHalfPi * std::floor(angle / kHalfPi);
    if (y_sign > 0)
        return into_quadrant;  // theta rises, alpha falls to its lower boundary
    return -(kHalfPi - into_quadrant);  // theta falls, alpha climbs to its upper one
}

std::vector<TransitionPoint> calc_transition_points(const Pose& start_w, const Pose& goal_w) {
    const double dx = goal_w.x - start_w.x;
    const double dy = goal_w.y - start_w.y;
    if (std::hypot(dx, dy) < kCoincidentTol)
        throw DegeneratePoints("calc_transition_points: positions coincide");

    std::vector<TransitionPoint> out;
    const int s = y_offset_sign(start_w, goal_w);
    if (s == 0)
        return out;  // goal track is collinear with the start; theta never moves

    const double theta0 = std::atan2(dy, dx);
    auto add_for = [&](double psi, TransitionPoint::Source source) {
        const auto dtheta = calc_delta_theta(psi - theta0, s);
        if (!dtheta)
            return;
        for (int j = 0; j < 2; ++j) {
            const double theta_n = theta0 + *dtheta + s * j * kHalfPi;
            // Reachability: theta(t) stays strictly inside (theta0, s*pi).
            if (s > 0 ? theta_n >= kPi : theta_n <= -kPi)
                break;
            const double sin_t = std::sin(theta_n);
            if (std::abs(sin_t) < 1e-12)
                continue;
            const double r = dx - dy * std::cos(theta_n) / sin_t;
            if (r > kCoincidentTol)
                out.push_back({r, source, mod2pi(theta_n)});
        }
    };
    add_for(start_w.psi, TransitionPoint::Source::alpha);
    add_for(goal_w.psi, TransitionPoint::Source::beta);

    std::sort(out.begin(), out.end(),
              [](const TransitionPoint& a, const TransitionPoint& b) { return a.r < b.r; });
    return out;
}

SegmentChoice find_solution_segment(const std::vector<TransitionPoint>& transitions,
                                    const Pose& start_w, const Pose& goal_w, const Wind& wind,
                                    const VehicleLimits& limits) {
    const double vw = wind.speed();
    if (!(limits.airspeed > vw))
        throw WindTooStrong("wind exceeds airspeed");

    const double four_r = 4.0 * limits.radius();
    const double dx = goal_w.x - start_w.x;
    const double dy = goal_w.y - start_w.y;

    double prev_r = 0.0;
    for (const TransitionPoint& tp : transitions) {
        if (!(segment_min_distance(start_w, goal_w, prev_r, tp.r) > four_r))
            return {0.0, Regime::short_distance_full};
        const double d = track_distance(start_w, goal_w, tp.r);
        const double alpha = start_w.psi - tp.theta;
        const double beta = goal_w.psi - tp.theta;
        const double l_p = shortest_dubins(mod2pi(alpha), mod2pi(beta), d / limits.radius())
                               .length() * limits.radius();
        const double t_start = l_p / limits.airspeed;
        const double t_goal = tp.r / vw;  // +inf for zero wind
        if (t_start <= t_goal) {
            const double mid_r = 0.5 * (prev_r + tp.r);
            return {mod2pi(std::atan2(dy, dx - mid_r)), Regime::reduced};
        }
        prev_r = tp.r;
    }

    // Solution beyond the last transition point (or no transitions at all):
    // bisect between the bearing there and the theta(t) limit.
    if (!(tail_min_distance(start_w, goal_w, prev_r) > four_r))
        return {0.0, Regime::short_distance_full};
    const int s = y_offset_sign(start_w, goal_w);
    const double theta_last = raw_bearing(start_w, goal_w, prev_r);
    const double limit = (s < 0) ? -kPi : kPi;
    return {mod2pi(0.5 * (theta_last + limit)), Regime::reduced};
}

SolveOutcome plan_solution(const Pose& start_i, const Pose& goal_i, const Wind& wind,
                           const VehicleLimits& limits) {
    const TrochoidProblem problem = make_problem(start_i, goal_i, wind, limits);
    if (problem.wind_speed < kZeroWindTol) {
        // Static goal: no transitions ever occur; fall back to the full set
        // so ties resolve exactly as in the no-wind Dubins ordering.
        return solve_candidates(problem, all_words(), Regime::short_distance_full);
    }

    const auto transitions = calc_transition_points(problem.start, problem.goal);
    const SegmentChoice choice =
        find_solution_segment(transitions, problem.start, problem.goal, wind, limits);
    if (choice.regime == Regime::short_distance_full)
        return solve_candidates(problem, all_words(), choice.regime);

    const double alpha_q = mod2pi(problem.start.psi - choice.theta_q);
    const double beta_q = mod2pi(problem.goal.psi - choice.theta_q);
    const QuadrantPair pair{quadrant_of(alpha_q), quadrant_of(beta_q)};
    const CandidateSet& block = decision_table(pair);
    return solve_candidates(problem, {block.begin(), block.end()}, Regime::reduced, pair);
}

SolveOutcome baseline_solution(const Pose& start_i, const Pose& goal_i, const Wind& wind,
                               const VehicleLimits& limits) {
    const TrochoidProblem problem = make_problem(start_i, goal_i, wind, limits);
    return solve_candidates(problem, all_words(), Regime::short_distance_full);
}

PlanResult plan(const Pose& start_i, const Pose& goal_i, const Wind& wind,
                const VehicleLimits& limits, double dt) {
    SolveOutcome outcome = plan_solution(start_i, goal_i, wind, limits);
    SampledPath path =
        construct_path(outcome.solution, outcome.problem, dt, start_i.z, goal_i.z, wind);
    return {std::move(path), outcome.word, outcome.solution.total_time,
            std::move(outcome.candidates_evaluated), outcome.numeric_solves, outcome.regime};
}

}  // namespace trochoid
