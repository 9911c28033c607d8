#pragma once

#include <string>

#include "json.hpp"
#include "minisphere/bench.hpp"
#include "minisphere/projection.hpp"

namespace minisphere::report {

using Json = nlohmann::ordered_json;

inline constexpr int kReportVersion = 1;

Json to_json(const Sphere& s);
Json to_json(const SolveReport& r, const std::string& requested_strategy);
Json to_json(const ScalingReport& r);
Json to_json(const ConvergenceReport& r);

/// Copy with wall-clock fields removed ("timings", "slope", "*_ms"), for
/// byte comparison of repeated runs.
Json strip_timing_fields(const Json& doc);

}  // namespace minisphere::report
