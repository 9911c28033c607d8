#pragma once

// Data-parallel scans behind the projection reduction. Each kernel has a
// serial reference in `serial::` and an OpenMP version in `omp::`; both must
// return identical results for identical input (tests compare them).

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "minisphere/frame.hpp"
#include "minisphere/geom.hpp"

namespace minisphere {

/// Slots of an extreme4 result.
enum Slot : std::size_t { kPlusU = 0, kMinusU = 1, kPlusV = 2, kMinusV = 3 };

using Extremes = std::array<std::size_t, 4>;

/// Ordering used to pick the extreme point of one slot. Exact ties on the
/// primary coordinate go to the larger secondary coordinate, then to the
/// normal coordinate signed like the slot, then to the lowest index. Every
/// slot winner under this order is a vertex of the convex hull.
struct SlotKey {
  double primary;
  double secondary;
  double normal;
  std::size_t index;

  friend bool beats(const SlotKey& lhs, const SlotKey& rhs) {
    if (lhs.primary != rhs.primary) return lhs.primary > rhs.primary;
    if (lhs.secondary != rhs.secondary) return lhs.secondary > rhs.secondary;
    if (lhs.normal != rhs.normal) return lhs.normal > rhs.normal;
    return lhs.index < rhs.index;
  }
};

std::array<SlotKey, 4> slot_keys(Point3 p, std::size_t index,
                                 const ProjectionFrame& f);

namespace serial {

Extremes extreme4(std::span<const Point3> points, const ProjectionFrame& f);

/// Per-frame extremes, in frame order.
std::vector<Extremes> extremes_per_frame(
    std::span<const Point3> points, std::span<const ProjectionFrame> frames);

/// Indices (ascending) of points outside `s` beyond tolerance.
std::vector<std::size_t> find_violators(std::span<const Point3> points,
                                        const Sphere& s, const Tolerance& tol);

}  // namespace serial

namespace omp {

Extremes extreme4(std::span<const Point3> points, const ProjectionFrame& f);

std::vector<Extremes> extremes_per_frame(
    std::span<const Point3> points, std::span<const ProjectionFrame> frames);

std::vector<std::size_t> find_violators(std::span<const Point3> points,
                                        const Sphere& s, const Tolerance& tol);

}  // namespace omp

}  // namespace minisphere
