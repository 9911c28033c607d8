#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>

namespace minisphere {

/// A position (or displacement) in 3D Euclidean space.
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr Point3 operator+(Point3 a, Point3 b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Point3 operator-(Point3 a, Point3 b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr Point3 operator*(double s, Point3 a) {
    return {s * a.x, s * a.y, s * a.z};
  }
  friend constexpr Point3 operator*(Point3 a, double s) { return s * a; }
  friend constexpr Point3 operator/(Point3 a, double s) {
    return {a.x / s, a.y / s, a.z / s};
  }
  friend constexpr Point3 operator-(Point3 a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr bool operator==(Point3, Point3) = default;
};

constexpr double dot(Point3 a, Point3 b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr Point3 cross(Point3 a, Point3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

constexpr double norm2(Point3 a) { return dot(a, a); }
inline double norm(Point3 a) { return std::sqrt(norm2(a)); }
constexpr double dist2(Point3 a, Point3 b) { return norm2(a - b); }
inline double dist(Point3 a, Point3 b) { return norm(a - b); }

inline bool is_finite(Point3 p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

struct Sphere {
  Point3 center;
  double radius = 0.0;
};

/// Relative tolerance model. The absolute band used by every predicate is
/// eps_rel * max(scale, 1), with scale the bounding-box diagonal of the input.
struct Tolerance {
  double eps_rel = 1e-9;
  double scale = 0.0;

  double absolute() const { return eps_rel * std::max(scale, 1.0); }

  static Tolerance for_points(std::span<const Point3> points,
                              double eps_rel = 1e-9);
};

/// Bounding-box diagonal; 0 for empty input.
double bbox_diagonal(std::span<const Point3> points);

Sphere sphere_from_two(Point3 a, Point3 b);

/// Smallest sphere through three points (center in their plane).
/// nullopt when the triple is collinear: |(b-a) x (c-a)| <= eps_rel * dmax^2.
std::optional<Sphere> sphere_from_three(Point3 a, Point3 b, Point3 c,
                                        const Tolerance& tol);

/// Circumsphere of a tetrahedron. nullopt when the quadruple is coplanar:
/// |det[b-a, c-a, d-a]| <= eps_rel * dmax^3.
std::optional<Sphere> sphere_from_four(Point3 a, Point3 b, Point3 c, Point3 d,
                                       const Tolerance& tol);

/// |p - center| <= radius + tol, compared on squared distances.
inline bool contains(const Sphere& s, Point3 p, const Tolerance& tol) {
  const double bound = s.radius + tol.absolute();
  return dist2(s.center, p) <= bound * bound;
}

}  // namespace minisphere
