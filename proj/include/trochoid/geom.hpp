#pragma once
/**
 * @file  geom.hpp
 * @brief Planar poses, wind, vehicle limits, and the frame/angle arithmetic
 *        used throughout the planner.
 *
 * Frames:
 *   F^i  inertial frame.
 *   F^w  wind frame: F^i rotated so the wind points along +x.
 *   F^d  Dubins frame: x axis aligned with the (possibly moving) start-goal
 *        line; only its angles (alpha, beta) appear here.
 *
 * Angles are radians, normalized to [0, 2pi) after every operation.
 */

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace trochoid {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kHalfPi = 0.5 * std::numbers::pi;

/// Two coincident points were given where distinct ones are required.
struct DegeneratePoints : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Wind speed at or above airspeed; the moving goal can outrun the vehicle.
struct WindTooStrong : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// No candidate trajectory could be solved for the given configuration.
struct NoSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Wraps an angle to [0, 2pi).
inline double mod2pi(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0)
        r += kTwoPi;
    if (r >= kTwoPi)
        r = 0.0;
    return r;
}

/// Planar pose with optional altitude. psi is kept in [0, 2pi).
struct Pose {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double psi = 0.0;

    Pose() = default;
    Pose(double x_, double y_, double psi_) : x(x_), y(y_), psi(mod2pi(psi_)) {}
    Pose(double x_, double y_, double z_, double psi_)
        : x(x_), y(y_), z(z_), psi(mod2pi(psi_)) {}
};

/// Uniform wind vector (m/s components in F^i).
struct Wind {
    double wx = 0.0;
    double wy = 0.0;

    double speed() const { return std::hypot(wx, wy); }
    /// Wind direction in [0, 2pi); 0 by convention for zero wind.
    double angle() const;
};

/// Airspeed and turn-rate budget. R = Va / omega.
struct VehicleLimits {
    double airspeed;       ///< Va > 0, m/s
    double max_turn_rate;  ///< omega > 0, rad/s

    VehicleLimits(double va, double omega) : airspeed(va), max_turn_rate(omega) {
        if (!(va > 0.0) || !(omega > 0.0))
            throw std::invalid_argument("VehicleLimits: airspeed and turn rate must be positive");
    }

    double radius() const { return airspeed / max_turn_rate; }
    /// Duration of one full turn at max rate, t_2pi = 2pi / omega.
    double period() const { return kTwoPi / max_turn_rate; }
};

/// Two-argument arctangent of the wind vector, normalized; (0, 0) maps to 0.
double wind_angle(double wx, double wy);

/// Quadrant index in {1, 2, 3, 4} under the half-open convention
/// [0, pi/2) -> 1, [pi/2, pi) -> 2, [pi, 3pi/2) -> 3, [3pi/2, 2pi) -> 4.
int quadrant_of(double angle);

/// Rotates a pose from F^i into F^w (position by R_i^w, heading by -psi_w).
Pose to_wind_frame(const Pose& p, const Wind& w);

/// Exact inverse of to_wind_frame.
Pose from_wind_frame(const Pose& p, const Wind& w);

/// Bearing from a pose to a point, in [0, 2pi).
/// Throws DegeneratePoints when the points are closer than 1e-9 m.
double bearing(const Pose& from, double to_x, double to_y);

}  // namespace trochoid
