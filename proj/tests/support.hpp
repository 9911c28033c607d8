#pragma once

// Shared helpers for the test binaries: rigid motions and fixed fixtures.

#include <array>
#include <cmath>
#include <vector>

#include "minisphere/geom.hpp"
#include "minisphere/rng.hpp"

namespace minisphere::testing {

inline std::vector<Point3> unit_cube_corners() {
  std::vector<Point3> out;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) out.push_back({double(x), double(y), double(z)});
  return out;
}

inline std::vector<Point3> cube_plus_center() {
  auto pts = unit_cube_corners();
  pts.push_back({0.5, 0.5, 0.5});
  return pts;
}

struct RigidMotion {
  std::array<Point3, 3> rows;  // rotation matrix rows
  Point3 shift;

  Point3 operator()(Point3 p) const {
    return Point3{dot(rows[0], p), dot(rows[1], p), dot(rows[2], p)} + shift;
  }
};

/// Random rotation (unit quaternion) plus a translation in [-5, 5]^3.
inline RigidMotion random_motion(Rng& rng) {
  double w = rng.normal(), x = rng.normal(), y = rng.normal(), z = rng.normal();
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  w /= n, x /= n, y /= n, z /= n;
  RigidMotion m;
  m.rows = {Point3{1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)},
            Point3{2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)},
            Point3{2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)}};
  m.shift = {rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
  return m;
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1.0);
}

}  // namespace minisphere::testing
