#pragma once

// Desk-scale ground truth. Nothing here shares code with the solver path:
// circumspheres use closed-form barycentric / Cramer constructions instead of
// the elimination in geom.cpp.

#include <cstddef>
#include <span>

#include "minisphere/frame.hpp"
#include "minisphere/geom.hpp"

namespace minisphere::oracle {

inline constexpr std::size_t kMaxBruteForce = 80;
inline constexpr std::size_t kMaxHullTest = 60;

/// Minimum-radius enclosing candidate over all pairs, non-collinear triples
/// and non-coplanar quadruples. Near-ties (1e-12) resolve by radius, then
/// lexicographic center. Throws EmptyInput, TooLarge (N > 80).
Sphere brute_force_ses(std::span<const Point3> points, const Tolerance& tol);

/// True iff points[index] is not a convex combination of the other points,
/// decided by a phase-1 simplex with residual tolerance tol.absolute().
/// Throws TooLarge (N > 60).
bool is_hull_vertex(std::size_t index, std::span<const Point3> points,
                    const Tolerance& tol);

struct Circle {
  double a = 0.0;
  double b = 0.0;
  double radius = 0.0;
};

/// Smallest enclosing circle of planar points (randomized incremental,
/// fixed internal seed). Throws EmptyInput.
Circle min_enclosing_circle(std::span<const PlaneCoords> points);

}  // namespace minisphere::oracle
