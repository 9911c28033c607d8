#pragma once

#include <cstddef>
#include <vector>

#include "minisphere/geom.hpp"

namespace minisphere {

/// Right-handed orthonormal basis {u, v, normal} attached to a projection
/// plane. In-plane coordinates of p are (p.u, p.v).
struct ProjectionFrame {
  Point3 normal;
  Point3 u;
  Point3 v;
};

struct PlaneCoords {
  double a = 0.0;
  double b = 0.0;
};

/// u = normalize(e x n) with e the coordinate axis of smallest |n_i|
/// (ties resolved y, x, z); v = n x u. Throws ZeroNormal for |n| <= 1e-12.
ProjectionFrame make_frame(Point3 normal);

inline PlaneCoords project(Point3 p, const ProjectionFrame& f) {
  return {dot(p, f.u), dot(p, f.v)};
}

/// The six canonical normals: three principal planes, three diagonal planes.
std::vector<Point3> canonical_normals();

/// Golden-angle spiral on the upper hemisphere with a van der Corput
/// elevation sequence. Independent of k, so fibonacci_normals(k1) is a prefix
/// of fibonacci_normals(k2) for k1 <= k2. The first normal is (0, 0, 1).
std::vector<Point3> fibonacci_normals(std::size_t k);

/// k == 6 gives the canonical set, any other k the spiral.
/// Throws InvalidK for k == 0.
std::vector<ProjectionFrame> generate_orientations(std::size_t k);

}  // namespace minisphere
