#pragma once
/**
 * @file  io.hpp
 * @brief CSV and JSON serialization for paths, plans, benchmark reports, and
 *        table validation reports. All JSON documents carry "schema": 1.
 */

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "trochoid/bench.hpp"
#include "trochoid/dubins.hpp"
#include "trochoid/planner.hpp"

namespace trochoid {

/// Writes `t,x,y,z,psi` rows (SI units, radians) with a header line.
void write_csv(const SampledPath& path, std::ostream& os);

nlohmann::json to_json(const SampledPath& path);
nlohmann::json to_json(const PlanResult& result, bool include_path = true);
nlohmann::json to_json(const BenchReport& report);
nlohmann::json to_json(const TableReport& report, bool include_regions = true);

}  // namespace trochoid
