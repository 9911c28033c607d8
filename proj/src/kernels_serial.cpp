#include "minisphere/kernels.hpp"

namespace minisphere {

std::array<SlotKey, 4> slot_keys(Point3 p, std::size_t index,
                                 const ProjectionFrame& f) {
  const auto [a, b] = project(p, f);
  const double c = dot(p, f.normal);
  return {SlotKey{a, b, c, index}, SlotKey{-a, b, -c, index},
          SlotKey{b, a, c, index}, SlotKey{-b, a, -c, index}};
}

namespace serial {

Extremes extreme4(std::span<const Point3> points, const ProjectionFrame& f) {
  if (points.empty()) return {};
  std::array<SlotKey, 4> best = slot_keys(points[0], 0, f);
  for (std::size_t i = 1; i < points.size(); ++i) {
    const auto keys = slot_keys(points[i], i, f);
    for (std::size_t s = 0; s < 4; ++s)
      if (beats(keys[s], best[s])) best[s] = keys[s];
  }
  return {best[0].index, best[1].index, best[2].index, best[3].index};
}

std::vector<Extremes> extremes_per_frame(
    std::span<const Point3> points, std::span<const ProjectionFrame> frames) {
  std::vector<Extremes> out;
  out.reserve(frames.size());
  for (const ProjectionFrame& f : frames) out.push_back(extreme4(points, f));
  return out;
}

std::vector<std::size_t> find_violators(std::span<const Point3> points,
                                        const Sphere& s, const Tolerance& tol) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!contains(s, points[i], tol)) out.push_back(i);
  return out;
}

}  // namespace serial
}  // namespace minisphere
