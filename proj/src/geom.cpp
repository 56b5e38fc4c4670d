#include "trochoid/geom.hpp"

namespace trochoid {

double wind_angle(double wx, double wy) {
    if (wx == 0.0 && wy == 0.0)
        return 0.0;
    return mod2pi(std::atan2(wy, wx));
}

double Wind::angle() const {
    return wind_angle(wx, wy);
}

int quadrant_of(double angle) {
    const double a = mod2pi(angle);
    const int q = static_cast<int>(a / kHalfPi) + 1;
    return q > 4 ? 4 : q;  // guards a == 2pi - eps rounding up
}

Pose to_wind_frame(const Pose& p, const Wind& w) {
    const double psi_w = w.angle();
    const double c = std::cos(psi_w);
    const double s = std::sin(psi_w);
    return {c * p.x + s * p.y, -s * p.x + c * p.y, p.z, p.psi - psi_w};
}

Pose from_wind_frame(const Pose& p, const Wind& w) {
    const double psi_w = w.angle();
    const double c = std::cos(psi_w);
    const double s = std::sin(psi_w);
    return {c * p.x - s * p.y, s * p.x + c * p.y, p.z, p.psi + psi_w};
}

double bearing(const Pose& from, double to_x, double to_y) {
    const double dx = to_x - from.x;
    const double dy = to_y - from.y;
    if (std::hypot(dx, dy) <= 1e-9)
        throw DegeneratePoints("bearing: points are coincident");
    return mod2pi(std::atan2(dy, dx));
}

}  // namespace trochoid
