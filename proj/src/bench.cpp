#include "minisphere/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <numeric>

#include "minisphere/error.hpp"
#include "minisphere/oracle.hpp"

namespace minisphere {
namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;
};

MeanSd mean_sd(const std::vector<double>& v) {
  MeanSd out;
  if (v.empty()) return out;
  out.mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  if (v.size() > 1) {
    double ss = 0.0;
    for (double x : v) ss += (x - out.mean) * (x - out.mean);
    out.sd = std::sqrt(ss / static_cast<double>(v.size() - 1));
  }
  return out;
}

// Enough repetitions that one timed sample covers ~2e5 point visits.
std::size_t repetitions(std::size_t n) {
  return std::max<std::size_t>(1, 200000 / std::max<std::size_t>(n, 1));
}

}  // namespace

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n < 2) throw Error(ErrorCode::InsufficientSamples, "slope needs two points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

ScalingReport run_scaling(const ScalingOptions& opts) {
  if (opts.sizes.size() < 2)
    throw Error(ErrorCode::InsufficientSamples, "scaling needs at least 2 sizes");
  if (opts.seeds.size() < 3)
    throw Error(ErrorCode::InsufficientSamples, "scaling needs at least 3 seeds");
  for (std::size_t i = 0; i < opts.sizes.size(); ++i) {
    if (opts.sizes[i] < 1000)
      throw Error(ErrorCode::InvalidParams, "scaling sizes must be >= 1000");
    if (i > 0 && opts.sizes[i] <= opts.sizes[i - 1])
      throw Error(ErrorCode::InvalidParams, "scaling sizes must be ascending");
  }

  ScalingReport report;
  report.strategy = opts.strategy;
  report.kind = opts.kind;
  std::vector<double> xs, ys;

  for (std::size_t n : opts.sizes) {
    ScalingRow row;
    row.n = n;
    const KSelection sel = opts.k.mode == KMode::Fixed
                               ? opts.k
                               : select_k(n, opts.k.mode, opts.k.c1, opts.k.c2);
    row.k = opts.strategy == Strategy::Projection ? sel.k : 0;
    std::vector<double> reduce_ms, solve_ms, verify_ms, repairs;
    const std::size_t reps = repetitions(n);

    for (std::uint64_t seed : opts.seeds) {
      const auto cloud = generate(opts.kind, n, RngSeed{seed}, opts.params);
      const Tolerance tol = Tolerance::for_points(cloud, opts.eps_rel);
      auto run_once = [&] {
        return opts.strategy == Strategy::Projection
                   ? solve(cloud, sel, RngSeed{seed}, tol)
                   : solve_full(cloud, RngSeed{seed}, tol);
      };
      (void)run_once();  // warm-up

      double total = 0.0, red = 0.0, sol = 0.0, ver = 0.0;
      SolveReport last;
      for (std::size_t r = 0; r < reps; ++r) {
        last = run_once();
        total += last.timings.total_ms;
        red += last.timings.reduce_ms;
        sol += last.timings.solve_ms;
        ver += last.timings.verify_ms;
      }
      const double div = static_cast<double>(reps);
      row.samples_ms.push_back(total / div);
      reduce_ms.push_back(red / div);
      solve_ms.push_back(sol / div);
      verify_ms.push_back(ver / div);
      repairs.push_back(static_cast<double>(last.repair_rounds));
    }

    row.median_ms = median(row.samples_ms);
    row.median_reduce_ms = median(reduce_ms);
    row.median_solve_ms = median(solve_ms);
    row.median_verify_ms = median(verify_ms);
    row.mean_repair_rounds = mean_sd(repairs).mean;
    xs.push_back(static_cast<double>(n));
    ys.push_back(std::max(row.median_ms, 1e-9));
    report.rows.push_back(std::move(row));
  }
  report.slope = loglog_slope(xs, ys);
  return report;
}

ConvergenceReport run_convergence(const std::vector<std::size_t>& ks,
                                  const std::vector<std::uint64_t>& seeds,
                                  const CloudSource& source, double eps_rel,
                                  bool parallel) {
  for (std::size_t k : ks)
    if (k == 0) throw Error(ErrorCode::InvalidK, "k must be at least 1");
  if (seeds.empty())
    throw Error(ErrorCode::InsufficientSamples, "convergence needs a seed");

  struct Sample {
    std::size_t n = 0;
    std::vector<double> coverage, repairs, reduced;
  };
  std::vector<Sample> samples(seeds.size());
  std::vector<std::exception_ptr> failures(seeds.size());

  const auto count = static_cast<std::ptrdiff_t>(seeds.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::ptrdiff_t s = 0; s < count; ++s) try {
    const RngSeed seed{seeds[static_cast<std::size_t>(s)]};
    const auto cloud = source(seed);
    const Tolerance tol = Tolerance::for_points(cloud, eps_rel);
    Sample& out = samples[static_cast<std::size_t>(s)];
    out.n = cloud.size();

    std::vector<bool> vertex;
    std::size_t hull_size = 0;
    if (cloud.size() <= kCoverageLimit) {
      vertex.resize(cloud.size());
      for (std::size_t i = 0; i < cloud.size(); ++i) {
        vertex[i] = oracle::is_hull_vertex(i, cloud, tol);
        hull_size += vertex[i] ? 1 : 0;
      }
    }
    for (std::size_t k : ks) {
      const SolveReport rep = solve(cloud, KSelection::fixed(k), seed, tol);
      out.repairs.push_back(static_cast<double>(rep.repair_rounds));
      out.reduced.push_back(static_cast<double>(rep.reduced_size));
      if (!vertex.empty()) {
        const auto frames = generate_orientations(k);
        const ReducedSet reduced = reduce_serial(cloud, frames);
        std::size_t hit = 0;
        for (std::size_t idx : reduced.indices) hit += vertex[idx] ? 1 : 0;
        out.coverage.push_back(hull_size == 0 ? 1.0
                                              : static_cast<double>(hit) /
                                                    static_cast<double>(hull_size));
      }
    }
  } catch (...) {
    failures[static_cast<std::size_t>(s)] = std::current_exception();
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  ConvergenceReport report;
  report.n = samples.front().n;
  for (std::size_t ki = 0; ki < ks.size(); ++ki) {
    ConvergenceRow row;
    row.k = ks[ki];
    std::vector<double> cov, rep, red;
    for (const Sample& s : samples) {
      if (!s.coverage.empty()) cov.push_back(s.coverage[ki]);
      rep.push_back(s.repairs[ki]);
      red.push_back(s.reduced[ki]);
    }
    if (cov.size() == samples.size()) {
      const MeanSd c = mean_sd(cov);
      row.mean_coverage = c.mean;
      row.sd_coverage = c.sd;
    }
    const MeanSd r = mean_sd(rep);
    row.mean_repair_rounds = r.mean;
    row.sd_repair_rounds = r.sd;
    row.mean_reduced_size = mean_sd(red).mean;
    report.rows.push_back(row);
  }
  return report;
}

ConvergenceReport run_convergence(const ConvergenceOptions& opts) {
  if (opts.n == 0 || opts.n > kConvergenceLimit)
    throw Error(ErrorCode::InvalidParams, "convergence n must be in [1, 400]");
  auto report = run_convergence(
      opts.ks, opts.seeds,
      [&opts](RngSeed seed) { return generate(opts.kind, opts.n, seed, opts.params); },
      opts.eps_rel, opts.parallel);
  report.kind = opts.kind;
  return report;
}

}  // namespace minisphere
