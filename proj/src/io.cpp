#include "trochoid/io.hpp"

#include <iomanip>
#include <ostream>

namespace trochoid {

void write_csv(const SampledPath& path, std::ostream& os) {
    os << "t,x,y,z,psi\n";
    os << std::setprecision(12);
    for (const PathSample& s : path.samples)
        os << s.t << ',' << s.pose.x << ',' << s.pose.y << ',' << s.pose.z << ',' << s.pose.psi
           << '\n';
}

nlohmann::json to_json(const SampledPath& path) {
    nlohmann::json samples = nlohmann::json::array();
    for (const PathSample& s : path.samples)
        samples.push_back({s.t, s.pose.x, s.pose.y, s.pose.z, s.pose.psi});
    return {{"word", to_string(path.word)},
            {"total_time", path.total_time},
            {"columns", {"t", "x", "y", "z", "psi"}},
            {"samples", std::move(samples)}};
}

nlohmann::json to_json(const PlanResult& result, bool include_path) {
    nlohmann::json candidates = nlohmann::json::array();
    for (PathWord w : result.candidates_evaluated)
        candidates.push_back(to_string(w));
    nlohmann::json j = {{"schema", 1},
                        {"word", to_string(result.word)},
                        {"total_time", result.total_time},
                        {"candidates_evaluated", std::move(candidates)},
                        {"numeric_solves", result.numeric_solves},
                        {"regime", to_string(result.regime)}};
    if (include_path)
        j["path"] = to_json(result.best);
    return j;
}

nlohmann::json to_json(const BenchReport& report) {
    nlohmann::json words;
    for (int i = 0; i < 4; ++i)
        words[to_string(static_cast<PathWord>(i))] = report.word_distribution[i];
    nlohmann::json blocks;
    for (int l = 1; l <= 4; ++l)
        for (int m = 1; m <= 4; ++m)
            blocks["a" + std::to_string(l) + std::to_string(m)] =
                report.block_distribution[4 * (l - 1) + (m - 1)];
    return {{"schema", 1},
            {"n_samples", report.n_samples},
            {"seed", report.seed},
            {"word_distribution", std::move(words)},
            {"block_distribution", std::move(blocks)},
            {"pct_d_gt_4R", report.pct_d_gt_4r},
            {"mean_numeric_solves", report.mean_numeric_solves},
            {"mean_candidates", report.mean_candidates},
            {"mean_time_reduced", report.mean_time_reduced},
            {"mean_time_baseline", report.mean_time_baseline},
            {"mismatches", report.mismatches},
            {"n_d_gt_4R", report.n_d_gt_4r}};
}

nlohmann::json to_json(const TableReport& report, bool include_regions) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const TableBlockReport& b : report.blocks) {
        nlohmann::json jb = {{"l", b.l}, {"m", b.m}, {"violations", b.violation_count}};
        if (include_regions) {
            // One digit per grid cell (PathWord index), one string per alpha row.
            nlohmann::json rows = nlohmann::json::array();
            for (int i = 0; i < report.grid_n; ++i) {
                std::string row(report.grid_n, '0');
                for (int j = 0; j < report.grid_n; ++j)
                    row[j] = static_cast<char>(
                        '0' + b.region[static_cast<std::size_t>(i) * report.grid_n + j]);
                rows.push_back(std::move(row));
            }
            jb["region"] = std::move(rows);
        }
        blocks.push_back(std::move(jb));
    }
    nlohmann::json violations = nlohmann::json::array();
    for (const TableViolation& v : report.violations)
        violations.push_back({{"l", v.l},
                              {"m", v.m},
                              {"alpha", v.alpha},
                              {"beta", v.beta},
                              {"optimal", to_string(v.optimal)}});
    return {{"schema", 1},
            {"d", report.d},
            {"grid_n", report.grid_n},
            {"corrected", report.corrected},
            {"word_codes", {"LSL", "LSR", "RSL", "RSR"}},
            {"total_violations", report.total_violations()},
            {"blocks", std::move(blocks)},
            {"violations", std::move(violations)}};
}

}  // namespace trochoid
