#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "minisphere/frame.hpp"
#include "minisphere/geom.hpp"
#include "minisphere/kernels.hpp"
#include "minisphere/welzl.hpp"

namespace minisphere {

/// P_s: hull-vertex candidates harvested from K projections.
struct ReducedSet {
  std::vector<std::size_t> indices;   // deduplicated, first-seen order
  std::vector<Extremes> per_plane;    // +u, -u, +v, -v per frame
};

enum class KMode { Symmetric6, General, Fixed };

struct KSelection {
  KMode mode = KMode::General;
  std::size_t k = 6;
  double c1 = 2.0;
  double c2 = 1.0;

  static KSelection fixed(std::size_t k) { return {KMode::Fixed, k, 2.0, 1.0}; }
};

/// Symmetric6 -> 6. General -> clamp(ceil(c1 n^(1/4)), 6, ceil(c2 sqrt(n)));
/// the upper bound is waived when it falls below 6.
KSelection select_k(std::size_t n, KMode mode, double c1 = 2.0,
                    double c2 = 1.0);

/// Union of extreme4 over `frames`, order-stable. Uses the OpenMP kernels.
ReducedSet reduce(std::span<const Point3> points,
                  std::span<const ProjectionFrame> frames);
ReducedSet reduce(std::span<const Point3> points, const KSelection& sel);

/// Sequential reference for reduce(); results are identical.
ReducedSet reduce_serial(std::span<const Point3> points,
                         std::span<const ProjectionFrame> frames);

enum class Strategy { Projection, Welzl };

const char* to_string(Strategy s);

struct StageTimings {
  double reduce_ms = 0.0;
  double solve_ms = 0.0;
  double verify_ms = 0.0;
  double total_ms = 0.0;
};

struct SolveReport {
  Sphere sphere;
  std::vector<std::size_t> support_indices;
  Strategy strategy = Strategy::Projection;
  std::size_t k = 0;
  std::size_t reduced_size = 0;    // |P_s| before repairs
  std::size_t working_size = 0;    // |P_s| plus repair additions
  std::size_t repair_rounds = 0;
  bool repair_overflow = false;    // fell back to the full-cloud solve
  StageTimings timings;
  std::size_t input_count = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kMaxRepairRounds = 16;

/// Reduce to P_s, solve P_s with Welzl, verify against the whole cloud and
/// re-solve with the violators added until nothing escapes. After
/// kMaxRepairRounds the full cloud is solved instead (repair_overflow set).
/// Throws EmptyInput, InvalidK.
SolveReport solve(std::span<const Point3> points, const KSelection& sel,
                  RngSeed seed, const Tolerance& tol);

/// Plain Welzl over the full cloud, reported in the same shape.
SolveReport solve_full(std::span<const Point3> points, RngSeed seed,
                       const Tolerance& tol);

}  // namespace minisphere
