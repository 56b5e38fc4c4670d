#pragma once
/**
 * @file  dubins.hpp
 * @brief No-wind Dubins Bang-Straight-Bang paths, the quadrant decision
 *        table, and the grid validation machinery for the table.
 *
 * Problems are radius-normalized: the start is (0, 0, alpha), the goal is
 * (d, 0, beta), and all segment lengths are in units of the turning radius.
 * The decision table maps the quadrants of (alpha, beta) to the candidate
 * optimal words; it assumes d > 4 (see the planner's segment check).
 */

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "trochoid/geom.hpp"

namespace trochoid {

/// The four BSB words. The enum order is also the deterministic tie-break
/// order used everywhere a minimum over words is taken.
enum class PathWord : std::uint8_t { LSL = 0, LSR = 1, RSL = 2, RSR = 3 };

inline constexpr std::array<PathWord, 4> kAllWords = {
    PathWord::LSL, PathWord::LSR, PathWord::RSL, PathWord::RSR};

const char* to_string(PathWord w);

/// Turn direction of the first bank: L = +1, R = -1.
inline constexpr double delta1(PathWord w) {
    return (w == PathWord::LSL || w == PathWord::LSR) ? 1.0 : -1.0;
}

/// Turn direction of the second bank: L = +1, R = -1.
inline constexpr double delta2(PathWord w) {
    return (w == PathWord::LSL || w == PathWord::RSL) ? 1.0 : -1.0;
}

/// One solved BSB word; t/p/q are the first-arc angle, straight length, and
/// second-arc angle in radius-normalized units.
struct DubinsSolution {
    PathWord word;
    double t;
    double p;
    double q;

    double length() const { return t + p + q; }
};

/// Segment lengths for a single word, or nullopt when that word cannot
/// connect the configurations (inverse-trig domain violation).
std::optional<DubinsSolution> dubins_word(double alpha, double beta, double d, PathWord word);

/// Minimum-length solution over all four words; exact ties resolve to the
/// earliest word in enum order. Throws NoSolution when all four are
/// infeasible (possible only for small d).
DubinsSolution shortest_dubins(double alpha, double beta, double d);

/// Quadrant pair a_lm: l is the quadrant of alpha, m the quadrant of beta.
struct QuadrantPair {
    int l;
    int m;
};

/// Non-empty, duplicate-free ordered set of candidate words from one
/// decision-table block.
struct CandidateSet {
    std::array<PathWord, 4> words;
    int size;

    const PathWord* begin() const { return words.data(); }
    const PathWord* end() const { return words.data() + size; }
    bool contains(PathWord w) const;
};

/// Block contents of the decision table. With corrected = false the four
/// blocks a12/a21/a34/a43 revert to their original two-word form; this
/// exists only to reproduce the table-error analysis.
const CandidateSet& decision_table(QuadrantPair pair, bool corrected = true);

/// One grid sample whose true optimal word is missing from its table block.
struct TableViolation {
    int l;
    int m;
    double alpha;
    double beta;
    PathWord optimal;
};

struct TableBlockReport {
    int l;
    int m;
    int violation_count;
    /// Row-major optimal-word map over the sampling grid (alpha rows, beta
    /// columns), for rendering region plots. Values are PathWord indices.
    std::vector<std::uint8_t> region;
};

struct TableReport {
    double d;
    int grid_n;
    bool corrected;
    std::array<TableBlockReport, 16> blocks;
    std::vector<TableViolation> violations;

    int total_violations() const;
};

/// Samples grid_n x grid_n (alpha, beta) points at cell midpoints inside
/// every quadrant-pair box, computes the true shortest word per sample, and
/// reports any sample whose word is absent from the block.
TableReport validate_table(double d, int grid_n, bool corrected = true);

}  // namespace trochoid
