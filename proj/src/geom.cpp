#include "minisphere/geom.hpp"

#include <array>
#include <limits>
#include <utility>

namespace minisphere {

double bbox_diagonal(std::span<const Point3> points) {
  if (points.empty()) return 0.0;
  Point3 lo = points.front();
  Point3 hi = points.front();
  for (const Point3& p : points) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  return dist(lo, hi);
}

Tolerance Tolerance::for_points(std::span<const Point3> points,
                                double eps_rel) {
  return Tolerance{eps_rel, bbox_diagonal(points)};
}

Sphere sphere_from_two(Point3 a, Point3 b) {
  return {0.5 * (a + b), 0.5 * dist(a, b)};
}

namespace {

double max_dist2(std::span<const Point3> pts) {
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      best = std::max(best, dist2(pts[i], pts[j]));
  return best;
}

// Radius reported as the largest distance to a defining point so the
// defining points are enclosed even with the last-bit error of the center.
Sphere around(Point3 center, std::span<const Point3> pts) {
  double r2 = 0.0;
  for (const Point3& p : pts) r2 = std::max(r2, dist2(center, p));
  return {center, std::sqrt(r2)};
}

}  // namespace

std::optional<Sphere> sphere_from_three(Point3 a, Point3 b, Point3 c,
                                        const Tolerance& tol) {
  const std::array pts{a, b, c};
  const Point3 ab = b - a;
  const Point3 ac = c - a;
  const Point3 n = cross(ab, ac);
  const double n2 = norm2(n);
  const double dmax2 = max_dist2(pts);
  if (std::sqrt(n2) <= tol.eps_rel * dmax2) return std::nullopt;

  const Point3 offset =
      (norm2(ac) * cross(n, ab) + norm2(ab) * cross(ac, n)) / (2.0 * n2);
  return around(a + offset, pts);
}

std::optional<Sphere> sphere_from_four(Point3 a, Point3 b, Point3 c, Point3 d,
                                       const Tolerance& tol) {
  const std::array pts{a, b, c, d};
  // Equidistance from a: 2 (q - a) . x = |q - a|^2, x = center - a.
  std::array<std::array<double, 4>, 3> m{};
  const std::array<Point3, 3> rows{b - a, c - a, d - a};
  for (std::size_t i = 0; i < 3; ++i) {
    const Point3 r = rows[i];
    m[i] = {r.x, r.y, r.z, 0.5 * norm2(r)};
  }

  double det = 1.0;
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < 3; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    if (m[col][col] == 0.0) break;
    for (std::size_t r = col + 1; r < 3; ++r) {
      const double f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < 4; ++k) m[r][k] -= f * m[col][k];
    }
  }

  const double dmax = std::sqrt(max_dist2(pts));
  if (std::abs(det) <= tol.eps_rel * dmax * dmax * dmax) return std::nullopt;

  std::array<double, 3> x{};
  for (std::size_t i = 3; i-- > 0;) {
    double s = m[i][3];
    for (std::size_t k = i + 1; k < 3; ++k) s -= m[i][k] * x[k];
    x[i] = s / m[i][i];
  }
  return around(a + Point3{x[0], x[1], x[2]}, pts);
}

}  // namespace minisphere
