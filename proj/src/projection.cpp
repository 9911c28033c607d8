#include "minisphere/projection.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "minisphere/error.hpp"

namespace minisphere {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

ReducedSet merge(std::size_t n, std::vector<Extremes> per_plane) {
  ReducedSet out;
  std::vector<bool> seen(n, false);
  for (const Extremes& e : per_plane)
    for (std::size_t idx : e)
      if (!seen[idx]) {
        seen[idx] = true;
        out.indices.push_back(idx);
      }
  out.per_plane = std::move(per_plane);
  return out;
}

void require_points(std::span<const Point3> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "no points");
}

}  // namespace

const char* to_string(Strategy s) {
  return s == Strategy::Projection ? "projection" : "welzl";
}

KSelection select_k(std::size_t n, KMode mode, double c1, double c2) {
  KSelection sel{mode, 6, c1, c2};
  if (mode != KMode::General) return sel;
  const double nd = static_cast<double>(std::max<std::size_t>(n, 1));
  // sqrt(sqrt(n)) is exact for perfect fourth powers, unlike pow(n, 0.25).
  const auto raw = static_cast<std::size_t>(std::ceil(c1 * std::sqrt(std::sqrt(nd))));
  const auto upper = static_cast<std::size_t>(std::ceil(c2 * std::sqrt(nd)));
  sel.k = std::max<std::size_t>(raw, 6);
  if (upper >= 6) sel.k = std::min(sel.k, upper);
  return sel;
}

ReducedSet reduce(std::span<const Point3> points,
                  std::span<const ProjectionFrame> frames) {
  require_points(points);
  return merge(points.size(), omp::extremes_per_frame(points, frames));
}

ReducedSet reduce_serial(std::span<const Point3> points,
                         std::span<const ProjectionFrame> frames) {
  require_points(points);
  return merge(points.size(), serial::extremes_per_frame(points, frames));
}

ReducedSet reduce(std::span<const Point3> points, const KSelection& sel) {
  const auto frames = generate_orientations(sel.k);
  return reduce(points, frames);
}

SolveReport solve(std::span<const Point3> points, const KSelection& sel,
                  RngSeed seed, const Tolerance& tol) {
  require_points(points);
  SolveReport report;
  report.strategy = Strategy::Projection;
  report.k = sel.k;
  report.input_count = points.size();
  report.seed = seed.value;

  // Consecutive checkpoints: the three stages tile the total.
  const auto start = Clock::now();
  auto mark = start;
  auto lap = [&mark](double& bucket) {
    const auto now = Clock::now();
    bucket += std::chrono::duration<double, std::milli>(now - mark).count();
    mark = now;
  };

  const auto frames = generate_orientations(sel.k);
  ReducedSet reduced = reduce(points, frames);
  report.reduced_size = reduced.indices.size();
  std::vector<std::size_t> working = std::move(reduced.indices);
  std::vector<bool> in_working(points.size(), false);
  for (std::size_t idx : working) in_working[idx] = true;
  std::vector<Point3> subset;
  lap(report.timings.reduce_ms);

  for (;;) {
    subset.clear();
    subset.reserve(working.size());
    for (std::size_t idx : working) subset.push_back(points[idx]);
    const WelzlResult sub = welzl_solve(subset, seed, tol);
    lap(report.timings.solve_ms);

    const auto violators = omp::find_violators(points, sub.sphere, tol);
    bool progressed = false;
    for (std::size_t idx : violators)
      if (!in_working[idx]) {
        in_working[idx] = true;
        working.push_back(idx);
        progressed = true;
      }
    lap(report.timings.verify_ms);

    if (violators.empty()) {
      report.sphere = sub.sphere;
      for (std::size_t local : sub.support.indices)
        report.support_indices.push_back(working[local]);
      break;
    }
    if (!progressed || report.repair_rounds == kMaxRepairRounds) {
      const WelzlResult full = welzl_solve(points, seed, tol);
      lap(report.timings.solve_ms);
      report.sphere = full.sphere;
      report.support_indices = full.support.indices;
      report.repair_overflow = true;
      break;
    }
    ++report.repair_rounds;
  }
  report.working_size = working.size();
  report.timings.total_ms = ms_since(start);
  return report;
}

SolveReport solve_full(std::span<const Point3> points, RngSeed seed,
                       const Tolerance& tol) {
  require_points(points);
  const auto start = Clock::now();
  SolveReport report;
  report.strategy = Strategy::Welzl;
  report.input_count = points.size();
  report.reduced_size = points.size();
  report.working_size = points.size();
  report.seed = seed.value;
  const WelzlResult full = welzl_solve(points, seed, tol);
  report.sphere = full.sphere;
  report.support_indices = full.support.indices;
  report.timings.solve_ms = ms_since(start);
  report.timings.total_ms = report.timings.solve_ms;
  return report;
}

}  // namespace minisphere
