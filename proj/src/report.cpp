#include "minisphere/report.hpp"

namespace minisphere::report {

Json to_json(const Sphere& s) {
  Json j;
  j["center"] = {s.center.x, s.center.y, s.center.z};
  j["radius"] = s.radius;
  return j;
}

Json to_json(const SolveReport& r, const std::string& requested_strategy) {
  Json j;
  j["report_version"] = kReportVersion;
  j["command"] = "solve";
  j["input_count"] = r.input_count;
  j["seed"] = r.seed;
  j["strategy"] = to_string(r.strategy);
  j["requested_strategy"] = requested_strategy;
  if (r.strategy == Strategy::Projection)
    j["k"] = r.k;
  else
    j["k"] = nullptr;
  j["reduced_size"] = r.reduced_size;
  j["working_size"] = r.working_size;
  j["repair_rounds"] = r.repair_rounds;
  j["repair_overflow"] = r.repair_overflow;
  j["sphere"] = to_json(r.sphere);
  j["support_indices"] = r.support_indices;
  j["timings"] = {{"reduce_ms", r.timings.reduce_ms},
                  {"solve_ms", r.timings.solve_ms},
                  {"verify_ms", r.timings.verify_ms},
                  {"total_ms", r.timings.total_ms}};
  return j;
}

Json to_json(const ScalingReport& r) {
  Json j;
  j["report_version"] = kReportVersion;
  j["command"] = "bench scaling";
  j["strategy"] = to_string(r.strategy);
  j["kind"] = std::string(to_string(r.kind));
  Json rows = Json::array();
  for (const ScalingRow& row : r.rows) {
    Json jr;
    jr["n"] = row.n;
    jr["k"] = row.k;
    jr["mean_repair_rounds"] = row.mean_repair_rounds;
    jr["median_ms"] = row.median_ms;
    jr["reduce_ms"] = row.median_reduce_ms;
    jr["solve_ms"] = row.median_solve_ms;
    jr["verify_ms"] = row.median_verify_ms;
    jr["samples_ms"] = row.samples_ms;
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  j["slope"] = r.slope;
  return j;
}

Json to_json(const ConvergenceReport& r) {
  Json j;
  j["report_version"] = kReportVersion;
  j["command"] = "bench convergence";
  j["n"] = r.n;
  j["kind"] = std::string(to_string(r.kind));
  Json rows = Json::array();
  for (const ConvergenceRow& row : r.rows) {
    Json jr;
    jr["k"] = row.k;
    jr["mean_coverage"] = row.mean_coverage ? Json(*row.mean_coverage) : Json(nullptr);
    jr["sd_coverage"] = row.sd_coverage ? Json(*row.sd_coverage) : Json(nullptr);
    jr["mean_repair_rounds"] = row.mean_repair_rounds;
    jr["sd_repair_rounds"] = row.sd_repair_rounds;
    jr["mean_reduced_size"] = row.mean_reduced_size;
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json strip_timing_fields(const Json& doc) {
  if (doc.is_array()) {
    Json out = Json::array();
    for (const auto& v : doc) out.push_back(strip_timing_fields(v));
    return out;
  }
  if (!doc.is_object()) return doc;
  Json out = Json::object();
  for (const auto& [key, value] : doc.items()) {
    if (key == "timings" || key == "slope") continue;
    if (key.size() > 3 && key.ends_with("_ms")) continue;
    out[key] = strip_timing_fields(value);
  }
  return out;
}

}  // namespace minisphere::report
