#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "minisphere/geom.hpp"

namespace minisphere {

struct RngSeed {
  std::uint64_t value = 0;
};

/// The (at most four) input points that determine a sphere, by index into
/// the solved point list.
struct SupportSet {
  std::vector<std::size_t> indices;
};

struct WelzlResult {
  Sphere sphere;
  SupportSet support;
};

/// Smallest enclosing sphere by the randomized incremental method with the
/// move-to-front heuristic. The input order is shuffled once with `seed`;
/// recursion depth is bounded by the support size, not by N.
/// Throws Error(EmptyInput) when `points` is empty.
WelzlResult welzl_solve(std::span<const Point3> points, RngSeed seed,
                        const Tolerance& tol);

/// Smallest sphere enclosing `points` with every point of `boundary` on its
/// surface (|boundary| <= 4). Degenerate boundaries (collinear triple,
/// coplanar quadruple) fall back to the smallest lower-order support sphere
/// that encloses the boundary set.
Sphere min_sphere_with_boundary(std::span<const Point3> points,
                                std::span<const Point3> boundary,
                                const Tolerance& tol);

}  // namespace minisphere
