#include "trochoid/solver.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <tuple>
#include <utility>

namespace trochoid {

namespace {

constexpr double kTimeEps = 1e-9;        // slack on validity windows, s
constexpr double kRendezvousTol = 1e-6;  // m, straight-segment collinearity
constexpr double kResidualTol = 1e-10;
constexpr double kRootAcceptTol = 1e-8;
constexpr int kNewtonMaxIter = 50;
constexpr int kGridPoints = 100;
constexpr std::array<int, 6> kUnwrapRange = {-3, -2, -1, 0, 1, 2};

// Per-word geometry: turn directions, trochoid constants of both banks, and
// the wrapped heading gap that couples them.
struct WordFrame {
    double d1, d2;
    double va, vw, omega, radius, t2pi;
    double psi_s, psi_g;
    Vec2 sc, gc;
    double dpsi;  // mod2pi(psi_s - psi_g)
};

WordFrame make_frame(const TrochoidProblem& p, PathWord w) {
    WordFrame f;
    f.d1 = delta1(w);
    f.d2 = delta2(w);
    f.va = p.limits.airspeed;
    f.vw = p.wind_speed;
    f.omega = p.limits.max_turn_rate;
    f.radius = p.limits.radius();
    f.t2pi = p.limits.period();
    f.psi_s = p.start.psi;
    f.psi_g = p.goal.psi;
    f.sc = {p.start.x - f.d1 * f.radius * std::sin(f.psi_s),
            p.start.y + f.d1 * f.radius * std::cos(f.psi_s)};
    // The goal trochoid is pinned to pass through the goal at parameter
    // t_2pi; the +/-2pi inside the trig collapses, the wind offset does not.
    f.gc = {p.goal.x - f.d2 * f.radius * std::sin(f.psi_g) - f.vw * f.t2pi,
            p.goal.y + f.d2 * f.radius * std::cos(f.psi_g)};
    f.dpsi = mod2pi(f.psi_s - f.psi_g);
    return f;
}

Vec2 bank1_point(const WordFrame& f, double t) {
    const double h = f.d1 * f.omega * t + f.psi_s;
    return {f.d1 * f.radius * std::sin(h) + f.vw * t + f.sc.x,
            -f.d1 * f.radius * std::cos(h) + f.sc.y};
}

Vec2 bank2_point(const WordFrame& f, double tau) {
    const double h = f.d2 * f.omega * tau + f.psi_g;
    return {f.d2 * f.radius * std::sin(h) + f.vw * tau + f.gc.x,
            -f.d2 * f.radius * std::cos(h) + f.gc.y};
}

// Goal-trochoid parameter at bank-2 entry for unwrap branch k; heading
// continuity d2*w*tau2 + psi_g = d1*w*t1 + psi_s (mod 2pi) by construction.
double tau2_of(const WordFrame& f, double t1, int k) {
    return (f.d1 / f.d2) * t1 + (f.dpsi + kTwoPi * k) / (f.d2 * f.omega);
}

void residual_terms(const WordFrame& f, int k, double& e, double& f_base, double& f_slope,
                    double& g) {
    e = f.va * (f.vw * (f.d1 - f.d2) / (f.d1 * f.d2 * f.omega) - (f.gc.y - f.sc.y));
    f_base = f.va * (f.gc.x - f.sc.x + f.vw * (f.dpsi + kTwoPi * k) / (f.d2 * f.omega));
    f_slope = f.va * f.vw * (f.d1 / f.d2 - 1.0);
    g = f.vw * (f.gc.y - f.sc.y) + f.va * f.va * (f.d2 - f.d1) / (f.d1 * f.d2 * f.omega);
}

// Validates a (t1, k) pair and assembles the solution: both bank windows
// within one turn, straight segment forward and collinear with the ground
// velocity at the shared heading.
std::optional<TrochoidSolution> make_candidate(const WordFrame& f, PathWord w, double t1, int k,
                                               double gamma) {
    if (std::isnan(t1) || t1 < -kTimeEps || t1 > f.t2pi + kTimeEps)
        return std::nullopt;
    double tau2 = tau2_of(f, t1, k);
    if (std::isnan(tau2) || tau2 < -kTimeEps || tau2 > f.t2pi + kTimeEps)
        return std::nullopt;
    t1 = std::clamp(t1, 0.0, f.t2pi);
    tau2 = std::clamp(tau2, 0.0, f.t2pi);

    const double h = f.d1 * f.omega * t1 + f.psi_s;
    const double vx = f.va * std::cos(h) + f.vw;
    const double vy = f.va * std::sin(h);
    const double v2 = vx * vx + vy * vy;
    const Vec2 p1 = bank1_point(f, t1);
    const Vec2 q = bank2_point(f, tau2);
    const double dx = q.x - p1.x;
    const double dy = q.y - p1.y;
    const double perp = std::abs(dx * vy - dy * vx) / std::sqrt(v2);
    if (!(perp < kRendezvousTol))
        return std::nullopt;
    double lambda = (dx * vx + dy * vy) / v2;
    if (lambda < -kTimeEps)
        return std::nullopt;
    lambda = std::max(lambda, 0.0);

    const double total = t1 + lambda + (f.t2pi - tau2);
    return TrochoidSolution{w, t1, t1 + lambda, total, k, f.sc, f.gc, gamma};
}

void push_unique(std::vector<TrochoidSolution>& out, const TrochoidSolution& s) {
    for (const auto& o : out)
        if (std::abs(o.t1 - s.t1) < 1e-9 && std::abs(o.total_time - s.total_time) < 1e-9)
            return;
    out.push_back(s);
}

void require_feasible_wind(const TrochoidProblem& p) {
    if (!(p.limits.airspeed > p.wind_speed))
        throw WindTooStrong("wind exceeds airspeed");
}

// rtsafe-style safeguarded Newton on a bracketing interval.
template <typename F>
double polish_root(F&& eval, double lo, double hi, double flo, double fhi) {
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    double xl = lo, xh = hi;
    if (flo > 0.0)
        std::swap(xl, xh);
    double x = 0.5 * (lo + hi);
    double dxold = std::abs(hi - lo);
    double dx = dxold;
    auto [fx, dfx] = eval(x);
    for (int it = 0; it < kNewtonMaxIter; ++it) {
        if (std::abs(fx) < kResidualTol)
            return x;
        const bool out_of_bracket = ((x - xh) * dfx - fx) * ((x - xl) * dfx - fx) > 0.0;
        if (out_of_bracket || std::abs(2.0 * fx) > std::abs(dxold * dfx)) {
            dxold = dx;
            dx = 0.5 * (xh - xl);
            x = xl + dx;
            if (x == xl)
                return x;
        } else {
            dxold = dx;
            dx = fx / dfx;
            const double prev = x;
            x -= dx;
            if (prev == x)
                return x;
        }
        std::tie(fx, dfx) = eval(x);
        if (fx < 0.0)
            xl = x;
        else
            xh = x;
    }
    return x;
}

}  // namespace

double residual_f(double t1, int k, const TrochoidProblem& problem, PathWord word) {
    const WordFrame f = make_frame(problem, word);
    double e, f_base, f_slope, g;
    residual_terms(f, k, e, f_base, f_slope, g);
    const double h = f.d1 * f.omega * t1 + f.psi_s;
    return e * std::cos(h) + (f_base + f_slope * t1) * std::sin(h) - g;
}

std::vector<TrochoidSolution> solve_analytic(const TrochoidProblem& problem, PathWord word) {
    if (word != PathWord::LSL && word != PathWord::RSR)
        throw std::invalid_argument("solve_analytic: word must be LSL or RSR");
    require_feasible_wind(problem);

    const WordFrame f = make_frame(problem, word);
    std::vector<TrochoidSolution> out;
    for (int k : kUnwrapRange) {
        const double dtau = (f.dpsi + kTwoPi * k) / (f.d2 * f.omega);
        // Center-line vector between the drift-matched circles.
        const double ex = f.gc.x - f.sc.x + f.vw * dtau;
        const double ey = f.gc.y - f.sc.y;
        const double gamma = std::atan2(ey, ex);
        const double asin_arg = f.vw / f.va * std::sin(gamma);
        if (std::abs(asin_arg) > 1.0)
            continue;
        const double principal = std::asin(asin_arg);
        for (const double branch : {principal, kPi - principal}) {
            const double h = gamma + branch;
            double t1 = (h - f.psi_s) / (f.d1 * f.omega);
            t1 -= f.t2pi * std::floor(t1 / f.t2pi);  // heading-preserving wrap
            if (auto cand = make_candidate(f, word, t1, k, gamma))
                push_unique(out, *cand);
        }
    }
    return out;
}

std::vector<TrochoidSolution> solve_numeric(const TrochoidProblem& problem, PathWord word) {
    if (word != PathWord::LSR && word != PathWord::RSL)
        throw std::invalid_argument("solve_numeric: word must be LSR or RSL");
    require_feasible_wind(problem);

    const WordFrame f = make_frame(problem, word);
    std::vector<TrochoidSolution> out;
    for (int k : kUnwrapRange) {
        double e, f_base, f_slope, g;
        residual_terms(f, k, e, f_base, f_slope, g);
        auto eval = [&](double t1) {
            const double h = f.d1 * f.omega * t1 + f.psi_s;
            const double ch = std::cos(h), sh = std::sin(h);
            const double fc = f_base + f_slope * t1;
            const double val = e * ch + fc * sh - g;
            const double deriv = (-e * sh + fc * ch) * f.d1 * f.omega + f_slope * sh;
            return std::pair{val, deriv};
        };

        auto try_root = [&](double lo, double hi, double flo, double fhi) {
            const double root = polish_root(eval, lo, hi, flo, fhi);
            if (std::abs(eval(root).first) < kRootAcceptTol)
                if (auto cand = make_candidate(f, word, root, k, 0.0))
                    push_unique(out, *cand);
        };

        const double step = f.t2pi / (kGridPoints - 1);
        double prev_t = 0.0;
        auto [prev_f, prev_df] = eval(prev_t);
        for (int i = 1; i < kGridPoints; ++i) {
            const double t = i * step;
            const auto [ft, dft] = eval(t);
            if (prev_f == 0.0 || prev_f * ft < 0.0) {
                try_root(prev_t, t, prev_f, ft);
            } else if (prev_df * dft < 0.0) {
                // Same-sign cell with an extremum inside: a root pair can hide
                // entirely within it near tangency. Bisect f' to the extremum
                // and split the cell if f pokes through zero there.
                double a = prev_t, b = t, da = prev_df;
                for (int it = 0; it < 60 && b - a > 1e-14 * f.t2pi; ++it) {
                    const double mid = 0.5 * (a + b);
                    const double dm = eval(mid).second;
                    if (da * dm <= 0.0)
                        b = mid;
                    else
                        a = mid, da = dm;
                }
                const double tm = 0.5 * (a + b);
                const double fm = eval(tm).first;
                if (fm == 0.0 || fm * prev_f < 0.0) {
                    try_root(prev_t, tm, prev_f, fm);
                    try_root(tm, t, fm, ft);
                }
            }
            prev_t = t;
            prev_f = ft;
            prev_df = dft;
        }
        // trailing grid point may sit exactly on a root
        if (prev_f == 0.0)
            if (auto cand = make_candidate(f, word, prev_t, k, 0.0))
                push_unique(out, *cand);
    }
    return out;
}

std::vector<TrochoidSolution> solve_word(const TrochoidProblem& problem, PathWord word) {
    if (word == PathWord::LSL || word == PathWord::RSR)
        return solve_analytic(problem, word);
    return solve_numeric(problem, word);
}

std::optional<TrochoidSolution> min_time(const std::vector<TrochoidSolution>& sols) {
    std::optional<TrochoidSolution> best;
    for (const auto& s : sols)
        if (!best || s.total_time < best->total_time)
            best = s;
    return best;
}

SampledPath construct_path(const TrochoidSolution& sol, const TrochoidProblem& problem,
                           double dt, double z_start, double z_goal, const Wind& wind) {
    if (!(dt > 0.0))
        throw std::invalid_argument("construct_path: dt must be positive");
    const WordFrame f = make_frame(problem, sol.word);
    const double t1 = sol.t1;
    const double t2 = sol.t2;
    const double total = sol.total_time;
    const double tau_off = total - f.t2pi;  // bank-2 parameter: tau = t - tau_off

    SampledPath path;
    path.total_time = total;
    path.word = sol.word;

    auto emit = [&](double t, double x, double y, double psi) {
        const double z = z_start + (total > 0.0 ? (z_goal - z_start) * t / total : 0.0);
        path.samples.push_back({t, from_wind_frame({x, y, z, psi}, wind)});
    };

    emit(0.0, problem.start.x, problem.start.y, problem.start.psi);

    auto sample_segment = [&](double ta, double tb, auto&& point_at) {
        const double dur = tb - ta;
        if (!(dur > 0.0))
            return;
        const int n = std::max(1, static_cast<int>(std::ceil(dur / dt)));
        for (int j = 1; j <= n; ++j)
            point_at(ta + dur * j / n);
    };

    sample_segment(0.0, t1, [&](double t) {
        const Vec2 p = bank1_point(f, t);
        emit(t, p.x, p.y, mod2pi(f.d1 * f.omega * t + f.psi_s));
    });

    const Vec2 p1 = bank1_point(f, t1);
    const Vec2 q = bank2_point(f, t2 - tau_off);
    const double h = mod2pi(f.d1 * f.omega * t1 + f.psi_s);
    sample_segment(t1, t2, [&](double t) {
        const double s = (t - t1) / (t2 - t1);
        emit(t, p1.x + s * (q.x - p1.x), p1.y + s * (q.y - p1.y), h);
    });

    sample_segment(t2, total, [&](double t) {
        const double tau = t - tau_off;
        const Vec2 p = bank2_point(f, tau);
        emit(t, p.x, p.y, mod2pi(f.d2 * f.omega * tau + f.psi_g));
    });

    return path;
}

}  // namespace trochoid
