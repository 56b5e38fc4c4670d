#include <doctest.h>

#include <cmath>
#include <numeric>

#include "support/oracles.hpp"
#include "trochoid/bench.hpp"

using namespace trochoid;

TEST_SUITE_BEGIN("bench");

TEST_CASE("config validation") {
    BenchConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.n_samples = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.airspeed = 10.0;  // below wind_max
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.radius_min = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.wind_min = 9.0;
    cfg.wind_max = 3.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("reports are reproducible and well formed") {
    BenchConfig cfg;
    cfg.n_samples = 400;
    cfg.seed = 7;
    const BenchReport a = run_bench(cfg);
    const BenchReport b = run_bench(cfg);

    CHECK(a.word_distribution == b.word_distribution);
    CHECK(a.block_distribution == b.block_distribution);
    CHECK(a.pct_d_gt_4r == b.pct_d_gt_4r);
    CHECK(a.mean_numeric_solves == b.mean_numeric_solves);
    CHECK(a.mismatches == b.mismatches);
    CHECK(a.n_d_gt_4r == b.n_d_gt_4r);

    const double word_sum =
        std::accumulate(a.word_distribution.begin(), a.word_distribution.end(), 0.0);
    CHECK(std::abs(word_sum - 1.0) < 1e-9);
    if (a.n_d_gt_4r > 0) {
        const double block_sum =
            std::accumulate(a.block_distribution.begin(), a.block_distribution.end(), 0.0);
        CHECK(std::abs(block_sum - 1.0) < 1e-9);
    }
    CHECK(a.mismatches == 0);
    CHECK(a.mean_candidates <= 4.0);
    CHECK(a.mean_numeric_solves <= 2.0);
    CHECK(a.mean_time_reduced > 0.0);
    CHECK(a.mean_time_baseline > 0.0);
}

TEST_CASE("candidate counts stay under the reduction budget") {
    BenchConfig cfg;
    cfg.n_samples = 2000;
    cfg.seed = 11;
    const BenchReport r = run_bench(cfg);
    CHECK(r.mean_candidates < 4.0);
    CHECK(r.mean_numeric_solves <= 1.25 + 0.05);
    CHECK(r.mismatches == 0);
}

TEST_CASE("baseline always evaluates the full set and never beats the reduced plan") {
    oracles::InstanceSampler s(501);
    for (int i = 0; i < 300; ++i) {
        const double vw = s.uniform(1.0, 15.0);
        const double psi_w = s.angle();
        const Wind wind{vw * std::cos(psi_w), vw * std::sin(psi_w)};
        const VehicleLimits limits(20.0, s.uniform(0.02, 2.0));
        const Pose start{s.uniform(-1000, 1000), s.uniform(-1000, 1000), s.angle()};
        const Pose goal{s.uniform(-1000, 1000), s.uniform(-1000, 1000), s.angle()};

        const PlanResult base = baseline_plan(start, goal, wind, limits, 1.0);
        CHECK(base.candidates_evaluated.size() == 4);
        CHECK(base.numeric_solves == 2);

        const PlanResult red = plan(start, goal, wind, limits, 1.0);
        CHECK(red.total_time <= base.total_time + 1e-9);
        CHECK(base.total_time <= red.total_time + 1e-6 * base.total_time);
    }
}

TEST_SUITE_END();
