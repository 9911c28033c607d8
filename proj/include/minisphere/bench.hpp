#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "minisphere/datagen.hpp"
#include "minisphere/projection.hpp"

namespace minisphere {

struct ScalingOptions {
  std::vector<std::size_t> sizes;     // ascending, each >= 1000
  std::vector<std::uint64_t> seeds;   // at least 3
  Strategy strategy = Strategy::Projection;
  KSelection k = KSelection::fixed(24);  // General re-selects k per size
  CloudKind kind = CloudKind::UniformBall;
  GenParams params;
  double eps_rel = 1e-9;
};

struct ScalingRow {
  std::size_t n = 0;
  std::size_t k = 0;
  double median_ms = 0.0;
  double median_reduce_ms = 0.0;
  double median_solve_ms = 0.0;
  double median_verify_ms = 0.0;
  double mean_repair_rounds = 0.0;
  std::vector<double> samples_ms;  // one per seed
};

struct ScalingReport {
  Strategy strategy = Strategy::Projection;
  CloudKind kind = CloudKind::UniformBall;
  std::vector<ScalingRow> rows;
  double slope = 0.0;  // least squares of log(median_ms) on log(n)
};

/// Median-of-seeds wall time per size, after one discarded warm-up solve per
/// (size, seed). Small sizes repeat the timed solve and report the mean.
/// Throws InsufficientSamples (< 2 sizes or < 3 seeds), InvalidParams.
ScalingReport run_scaling(const ScalingOptions& opts);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

using CloudSource = std::function<std::vector<Point3>(RngSeed)>;

struct ConvergenceOptions {
  std::size_t n = 30;  // <= 400
  std::vector<std::size_t> ks;
  std::vector<std::uint64_t> seeds;
  CloudKind kind = CloudKind::UniformBall;
  GenParams params;
  double eps_rel = 1e-9;
  bool parallel = false;  // spread seeds over OpenMP threads
};

struct ConvergenceRow {
  std::size_t k = 0;
  std::optional<double> mean_coverage;  // only when n <= kCoverageLimit
  std::optional<double> sd_coverage;
  double mean_repair_rounds = 0.0;
  double sd_repair_rounds = 0.0;
  double mean_reduced_size = 0.0;
};

struct ConvergenceReport {
  std::size_t n = 0;
  CloudKind kind = CloudKind::UniformBall;
  std::vector<ConvergenceRow> rows;
};

inline constexpr std::size_t kCoverageLimit = 40;
inline constexpr std::size_t kConvergenceLimit = 400;

/// Per k: hull-vertex coverage |P_s & P_ch| / |P_ch| (n <= 40) and repair
/// rounds, as mean and sample standard deviation over the seeds.
/// Throws InvalidK, InvalidParams.
ConvergenceReport run_convergence(const ConvergenceOptions& opts);

/// Same study over an arbitrary cloud source; n is taken from the clouds.
ConvergenceReport run_convergence(const std::vector<std::size_t>& ks,
                                  const std::vector<std::uint64_t>& seeds,
                                  const CloudSource& source,
                                  double eps_rel = 1e-9, bool parallel = false);

}  // namespace minisphere
