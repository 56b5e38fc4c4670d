#pragma once
/**
 * @file  solver.hpp
 * @brief Single-word BSB trochoid solvers in the wind frame, plus path
 *        construction and sampling.
 *
 * Problems live in F^w: the wind points along +x with magnitude Vw, the
 * vehicle flies at airspeed Va with |psi_dot| <= omega, and each bank traces
 * a trochoid (a wind-advected circle). LSL/RSR close in one arcsine; LSR/RSL
 * need root finding on the bank-exit tangency residual.
 *
 * Time bookkeeping: t1 and t2 in TrochoidSolution are vehicle times (exit of
 * bank 1, entry of bank 2), so 0 <= t1 <= t2 <= T always. The goal-circle
 * sampling parameter runs over [t2 - T + t_2pi, t_2pi]; the k index selects
 * the heading-unwrap branch that couples the two banks.
 */

#include <optional>
#include <vector>

#include "trochoid/dubins.hpp"
#include "trochoid/geom.hpp"

namespace trochoid {

/// A single rendezvous problem posed in F^w.
struct TrochoidProblem {
    Pose start;         ///< start pose in F^w
    Pose goal;          ///< goal pose in F^w
    double wind_speed;  ///< Vw >= 0, along +x of F^w
    VehicleLimits limits;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// One solved BSB trochoid trajectory.
struct TrochoidSolution {
    PathWord word;
    double t1;          ///< s, exit of the first bank
    double t2;          ///< s, entry of the second bank (vehicle time)
    double total_time;  ///< s, rendezvous time T
    int k;              ///< heading-unwrap index in {-3..2}
    Vec2 start_center;  ///< (x_s0, y_s0): start trochoid constants
    Vec2 goal_center;   ///< (x_g0, y_g0): goal trochoid constants
    double gamma;       ///< center-line angle (LSL/RSR only, else 0)
};

struct PathSample {
    double t;
    Pose pose;  ///< in F^i
};

/// A time-sampled path in the inertial frame.
struct SampledPath {
    std::vector<PathSample> samples;
    double total_time;
    PathWord word;
};

/// Bank-exit tangency residual f(t1) for the LSR/RSL words:
/// E cos(d1 w t1 + psi_s) + F(t1) sin(d1 w t1 + psi_s) - G. Roots are the
/// bank-1 exit times whose straight segment meets the goal trochoid.
double residual_f(double t1, int k, const TrochoidProblem& problem, PathWord word);

/// Closed-form solver for LSL/RSR: one candidate per valid (k, arcsine
/// branch), each validated against the rendezvous conditions. Returns all
/// valid candidates (possibly empty = infeasible).
/// Throws WindTooStrong when Vw >= Va and std::invalid_argument on a
/// numeric-only word.
std::vector<TrochoidSolution> solve_analytic(const TrochoidProblem& problem, PathWord word);

/// Root-finding solver for LSR/RSL: per k, brackets sign changes of
/// residual_f on a 100-point grid over [0, t_2pi] and polishes each with
/// safeguarded Newton to |f| < 1e-10, then validates. Returns all valid
/// candidates (possibly empty = infeasible).
std::vector<TrochoidSolution> solve_numeric(const TrochoidProblem& problem, PathWord word);

/// Dispatches to solve_analytic or solve_numeric by word.
std::vector<TrochoidSolution> solve_word(const TrochoidProblem& problem, PathWord word);

/// Minimum-time solution among a solver's candidates, if any.
std::optional<TrochoidSolution> min_time(const std::vector<TrochoidSolution>& sols);

/// Samples the solved trajectory at spacing <= dt, transforms back to F^i,
/// and interpolates altitude linearly in time from z_start to z_goal.
SampledPath construct_path(const TrochoidSolution& sol, const TrochoidProblem& problem,
                           double dt, double z_start, double z_goal, const Wind& wind);

}  // namespace trochoid
