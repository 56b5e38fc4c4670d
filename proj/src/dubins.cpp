#include "trochoid/dubins.hpp"

#include <algorithm>
#include <cmath>

namespace trochoid {

namespace {

// Classic per-word closed forms: the center-line angle theta and the
// arc/straight lengths for start (0,0,alpha) and goal (d,0,beta) with unit
// turning radius.

std::optional<DubinsSolution> word_lsl(double alpha, double beta, double d) {
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const double cb = std::cos(beta), sb = std::sin(beta);
    const double p2 = 2.0 + d * d - 2.0 * (ca * cb + sa * sb - d * (sa - sb));
    if (p2 < 0.0)
        return std::nullopt;
    const double theta = std::atan2(cb - ca, d + sa - sb);
    return DubinsSolution{PathWord::LSL, mod2pi(-alpha + theta), std::sqrt(p2),
                          mod2pi(beta - theta)};
}

std::optional<DubinsSolution> word_rsr(double alpha, double beta, double d) {
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const double cb = std::cos(beta), sb = std::sin(beta);
    const double p2 = 2.0 + d * d - 2.0 * (ca * cb + sa * sb - d * (sb - sa));
    if (p2 < 0.0)
        return std::nullopt;
    const double theta = std::atan2(ca - cb, d - sa + sb);
    return DubinsSolution{PathWord::RSR, mod2pi(alpha - theta), std::sqrt(p2),
                          mod2pi(-beta + theta)};
}

std::optional<DubinsSolution> word_lsr(double alpha, double beta, double d) {
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const double cb = std::cos(beta), sb = std::sin(beta);
    const double p2 = -2.0 + d * d + 2.0 * (ca * cb + sa * sb + d * (sa + sb));
    if (p2 < 0.0)
        return std::nullopt;
    const double p = std::sqrt(p2);
    const double theta = std::atan2(-ca - cb, d + sa + sb) - std::atan2(-2.0, p);
    return DubinsSolution{PathWord::LSR, mod2pi(-alpha + theta), p, mod2pi(-beta + theta)};
}

std::optional<DubinsSolution> word_rsl(double alpha, double beta, double d) {
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const double cb = std::cos(beta), sb = std::sin(beta);
    const double p2 = -2.0 + d * d + 2.0 * (ca * cb + sa * sb - d * (sa + sb));
    if (p2 < 0.0)
        return std::nullopt;
    const double p = std::sqrt(p2);
    const double theta = std::atan2(ca + cb, d - sa - sb) - std::atan2(2.0, p);
    return DubinsSolution{PathWord::RSL, mod2pi(alpha - theta), p, mod2pi(beta - theta)};
}

constexpr PathWord L = PathWord::LSL;
constexpr PathWord R = PathWord::RSR;
constexpr PathWord LR = PathWord::LSR;
constexpr PathWord RL = PathWord::RSL;

constexpr CandidateSet set1(PathWord a) {
    return {{a, a, a, a}, 1};
}
constexpr CandidateSet set2(PathWord a, PathWord b) {
    return {{a, b, b, b}, 2};
}
constexpr CandidateSet set3(PathWord a, PathWord b, PathWord c) {
    return {{a, b, c, c}, 3};
}

// Rows: quadrant of alpha; columns: quadrant of beta. Includes the corrected
// a12/a21/a34/a43 blocks (third entry added in each).
constexpr std::array<CandidateSet, 16> kCorrectedTable = {{
    set1(RL),          set3(R, RL, LR), set2(R, LR),     set3(LR, RL, R),
    set3(L, RL, LR),   set3(L, RL, R),  set1(R),         set2(R, RL),
    set2(L, LR),       set1(L),         set3(R, LR, L),  set3(R, LR, RL),
    set3(RL, LR, L),   set2(L, RL),     set3(L, LR, RL), set1(LR),
}};

constexpr std::array<CandidateSet, 16> kOriginalTable = {{
    set1(RL),          set2(R, RL),     set2(R, LR),     set3(LR, RL, R),
    set2(L, RL),       set3(L, RL, R),  set1(R),         set2(R, RL),
    set2(L, LR),       set1(L),         set3(R, LR, L),  set2(R, LR),
    set3(RL, LR, L),   set2(L, RL),     set2(L, LR),     set1(LR),
}};

}  // namespace

const char* to_string(PathWord w) {
    switch (w) {
        case PathWord::LSL: return "LSL";
        case PathWord::LSR: return "LSR";
        case PathWord::RSL: return "RSL";
        case PathWord::RSR: return "RSR";
    }
    return "?";
}

bool CandidateSet::contains(PathWord w) const {
    return std::find(begin(), end(), w) != end();
}

std::optional<DubinsSolution> dubins_word(double alpha, double beta, double d, PathWord word) {
    switch (word) {
        case PathWord::LSL: return word_lsl(alpha, beta, d);
        case PathWord::LSR: return word_lsr(alpha, beta, d);
        case PathWord::RSL: return word_rsl(alpha, beta, d);
        case PathWord::RSR: return word_rsr(alpha, beta, d);
    }
    return std::nullopt;
}

DubinsSolution shortest_dubins(double alpha, double beta, double d) {
    std::optional<DubinsSolution> best;
    for (PathWord w : kAllWords) {
        auto s = dubins_word(alpha, beta, d, w);
        if (s && (!best || s->length() < best->length()))
            best = s;
    }
    if (!best)
        throw NoSolution("shortest_dubins: no BSB word is feasible");
    return *best;
}

const CandidateSet& decision_table(QuadrantPair pair, bool corrected) {
    if (pair.l < 1 || pair.l > 4 || pair.m < 1 || pair.m > 4)
        throw std::invalid_argument("decision_table: quadrant indices must be in 1..4");
    const auto& table = corrected ? kCorrectedTable : kOriginalTable;
    return table[4 * (pair.l - 1) + (pair.m - 1)];
}

int TableReport::total_violations() const {
    return static_cast<int>(violations.size());
}

TableReport validate_table(double d, int grid_n, bool corrected) {
    if (grid_n < 1)
        throw std::invalid_argument("validate_table: grid_n must be >= 1");
    if (!(d > 4.0))
        throw std::invalid_argument("validate_table: the table assumes d > 4");
    TableReport report{d, grid_n, corrected, {}, {}};
    const double cell = kHalfPi / grid_n;
    for (int l = 1; l <= 4; ++l) {
        for (int m = 1; m <= 4; ++m) {
            auto& block = report.blocks[4 * (l - 1) + (m - 1)];
            block.l = l;
            block.m = m;
            block.violation_count = 0;
            block.region.resize(static_cast<std::size_t>(grid_n) * grid_n);
            const CandidateSet& cands = decision_table({l, m}, corrected);
            const double alpha0 = (l - 1) * kHalfPi;
            const double beta0 = (m - 1) * kHalfPi;
            for (int i = 0; i < grid_n; ++i) {
                const double alpha = alpha0 + (i + 0.5) * cell;
                for (int j = 0; j < grid_n; ++j) {
                    const double beta = beta0 + (j + 0.5) * cell;
                    const PathWord opt = shortest_dubins(alpha, beta, d).word;
                    block.region[static_cast<std::size_t>(i) * grid_n + j] =
                        static_cast<std::uint8_t>(opt);
                    if (!cands.contains(opt)) {
                        ++block.violation_count;
                        report.violations.push_back({l, m, alpha, beta, opt});
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace trochoid
