#include <doctest.h>

#include <sstream>

#include "trochoid/io.hpp"

using namespace trochoid;

TEST_SUITE_BEGIN("io");

namespace {

PlanResult sample_plan() {
    return plan(Pose{0, 0, 0, 0}, Pose{500, 0, 50, 0}, Wind{2.0, 1.0}, VehicleLimits(20.0, 0.2),
                0.5);
}

}  // namespace

TEST_CASE("csv export") {
    const PlanResult r = sample_plan();
    std::ostringstream os;
    write_csv(r.best, os);
    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    CHECK(header == "t,x,y,z,psi");
    std::string row;
    std::size_t rows = 0;
    double first_t = -1.0;
    while (std::getline(is, row)) {
        if (rows == 0)
            first_t = std::stod(row.substr(0, row.find(',')));
        ++rows;
    }
    CHECK(rows == r.best.samples.size());
    CHECK(first_t == 0.0);
}

TEST_CASE("plan json") {
    const PlanResult r = sample_plan();
    const auto j = to_json(r);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("word").is_string());
    CHECK(j.at("total_time").get<double>() == doctest::Approx(r.total_time));
    CHECK(j.at("candidates_evaluated").is_array());
    CHECK(j.at("numeric_solves").is_number_integer());
    CHECK((j.at("regime") == "reduced" || j.at("regime") == "short_distance_full"));
    CHECK(j.at("path").at("samples").size() == r.best.samples.size());
    CHECK(to_json(r, false).contains("path") == false);
}

TEST_CASE("bench json") {
    BenchConfig cfg;
    cfg.n_samples = 60;
    cfg.seed = 3;
    const auto j = to_json(run_bench(cfg));
    CHECK(j.at("schema") == 1);
    CHECK(j.at("word_distribution").size() == 4);
    CHECK(j.at("block_distribution").size() == 16);
    CHECK(j.at("mismatches") == 0);
    double total = 0.0;
    for (const auto& [k, v] : j.at("word_distribution").items())
        total += v.get<double>();
    CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("table report json") {
    const auto report = validate_table(4.01, 8, true);
    const auto j = to_json(report);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("blocks").size() == 16);
    CHECK(j.at("total_violations") == 0);
    CHECK(j.at("blocks")[0].at("region").size() == 8);
    const auto lean = to_json(report, false);
    CHECK(lean.at("blocks")[0].contains("region") == false);
}

TEST_SUITE_END();
