#include <omp.h>

#include "minisphere/kernels.hpp"

namespace minisphere::omp {

Extremes extreme4(std::span<const Point3> points, const ProjectionFrame& f) {
  if (points.empty()) return {};
  const auto n = static_cast<std::ptrdiff_t>(points.size());
  std::vector<std::array<SlotKey, 4>> partial;

#pragma omp parallel
  {
#pragma omp single
    partial.assign(static_cast<std::size_t>(omp_get_num_threads()),
                   slot_keys(points[0], 0, f));
    auto& best = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 1; i < n; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      const auto keys = slot_keys(points[idx], idx, f);
      for (std::size_t s = 0; s < 4; ++s)
        if (beats(keys[s], best[s])) best[s] = keys[s];
    }
  }

  // beats() is a total order, so the merge is independent of thread count.
  std::array<SlotKey, 4> best = partial.front();
  for (const auto& local : partial)
    for (std::size_t s = 0; s < 4; ++s)
      if (beats(local[s], best[s])) best[s] = local[s];
  return {best[0].index, best[1].index, best[2].index, best[3].index};
}

std::vector<Extremes> extremes_per_frame(
    std::span<const Point3> points, std::span<const ProjectionFrame> frames) {
  std::vector<Extremes> out(frames.size());
  const auto k = static_cast<std::ptrdiff_t>(frames.size());
  // Few frames and many points: split the points. Otherwise split the frames.
  if (k < omp_get_max_threads()) {
    for (std::ptrdiff_t j = 0; j < k; ++j)
      out[static_cast<std::size_t>(j)] =
          extreme4(points, frames[static_cast<std::size_t>(j)]);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t j = 0; j < k; ++j)
    out[static_cast<std::size_t>(j)] =
        serial::extreme4(points, frames[static_cast<std::size_t>(j)]);
  return out;
}

std::vector<std::size_t> find_violators(std::span<const Point3> points,
                                        const Sphere& s, const Tolerance& tol) {
  const auto n = static_cast<std::ptrdiff_t>(points.size());
  std::vector<std::vector<std::size_t>> partial;

#pragma omp parallel
  {
#pragma omp single
    partial.resize(static_cast<std::size_t>(omp_get_num_threads()));
    auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
    // Static chunks are contiguous and ordered by thread id, so the
    // concatenation below is ascending.
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      if (!contains(s, points[idx], tol)) local.push_back(idx);
    }
  }

  std::vector<std::size_t> out;
  for (const auto& local : partial) out.insert(out.end(), local.begin(), local.end());
  return out;
}

}  // namespace minisphere::omp
