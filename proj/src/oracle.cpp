#include "minisphere/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "minisphere/error.hpp"
#include "minisphere/rng.hpp"

namespace minisphere::oracle {
namespace {

bool encloses(const Sphere& s, Point3 p, double slack) {
  const double bound = s.radius + slack;
  return dist2(s.center, p) <= bound * bound;
}

double radius_to(Point3 c, std::initializer_list<Point3> pts) {
  double r2 = 0.0;
  for (Point3 p : pts) r2 = std::max(r2, dist2(c, p));
  return std::sqrt(r2);
}

std::optional<Sphere> circum3(Point3 a, Point3 b, Point3 c, double eps) {
  const double la = dist2(b, c), lb = dist2(a, c), lc = dist2(a, b);
  const double dmax2 = std::max({la, lb, lc});
  if (norm(cross(b - a, c - a)) <= eps * dmax2) return std::nullopt;
  const double wa = la * (lb + lc - la);
  const double wb = lb * (lc + la - lb);
  const double wc = lc * (la + lb - lc);
  const Point3 center = (wa * a + wb * b + wc * c) / (wa + wb + wc);
  return Sphere{center, radius_to(center, {a, b, c})};
}

std::optional<Sphere> circum4(Point3 a, Point3 b, Point3 c, Point3 d,
                              double eps) {
  const Point3 d1 = b - a, d2 = c - a, d3 = d - a;
  const double vol = dot(d1, cross(d2, d3));
  const double dmax = std::sqrt(std::max({norm2(d1), norm2(d2), norm2(d3),
                                          dist2(b, c), dist2(b, d),
                                          dist2(c, d)}));
  if (std::abs(vol) <= eps * dmax * dmax * dmax) return std::nullopt;
  const Point3 offset = (norm2(d1) * cross(d2, d3) + norm2(d2) * cross(d3, d1) +
                         norm2(d3) * cross(d1, d2)) /
                        (2.0 * vol);
  const Point3 center = a + offset;
  return Sphere{center, radius_to(center, {a, b, c, d})};
}

struct Best {
  Sphere sphere;
  bool found = false;

  static bool lex_less(Point3 l, Point3 r) {
    return std::tie(l.x, l.y, l.z) < std::tie(r.x, r.y, r.z);
  }

  bool improves(const Sphere& s) const {
    if (!found) return true;
    const double band = 1e-12 * std::max(1.0, sphere.radius);
    if (s.radius < sphere.radius - band) return true;
    if (s.radius > sphere.radius + band) return false;
    return s.radius < sphere.radius ||
           (s.radius == sphere.radius && lex_less(s.center, sphere.center));
  }
};

}  // namespace

Sphere brute_force_ses(std::span<const Point3> points, const Tolerance& tol) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "brute_force_ses: no points");
  if (points.size() > kMaxBruteForce)
    throw Error(ErrorCode::TooLarge, "brute_force_ses: more than 80 points");
  if (points.size() == 1) return Sphere{points[0], 0.0};

  const double slack = tol.absolute();
  const std::size_t n = points.size();
  Best best;
  auto offer = [&](const Sphere& s) {
    if (!best.improves(s)) return;
    for (const Point3& p : points)
      if (!encloses(s, p, slack)) return;
    best.sphere = s;
    best.found = true;
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point3 a = points[i], b = points[j];
      const Point3 mid = 0.5 * (a + b);
      offer(Sphere{mid, radius_to(mid, {a, b})});
      for (std::size_t k = j + 1; k < n; ++k) {
        if (auto s = circum3(a, b, points[k], tol.eps_rel)) offer(*s);
        for (std::size_t l = k + 1; l < n; ++l)
          if (auto s = circum4(a, b, points[k], points[l], tol.eps_rel))
            offer(*s);
      }
    }

  if (!best.found)
    throw std::logic_error("brute_force_ses: no enclosing candidate");
  return best.sphere;
}

bool is_hull_vertex(std::size_t index, std::span<const Point3> points,
                    const Tolerance& tol) {
  if (points.size() > kMaxHullTest)
    throw Error(ErrorCode::TooLarge, "is_hull_vertex: more than 60 points");
  if (index >= points.size())
    throw Error(ErrorCode::InvalidParams, "is_hull_vertex: index out of range");
  if (points.size() == 1) return true;

  // Phase-1 simplex. Rows: sum_j lambda_j (p_j - p) = 0 (3 rows) and
  // w * sum_j lambda_j = w, with w = max(scale, 1) to keep every row in
  // length units. One artificial per row; minimise their sum.
  const double w = std::max(tol.scale, 1.0);
  const Point3 target = points[index];
  std::vector<Point3> others;
  for (std::size_t j = 0; j < points.size(); ++j)
    if (j != index) others.push_back(points[j] - target);

  const std::size_t m = others.size();
  const std::size_t rows = 4;
  const std::size_t cols = m + rows;  // lambdas, artificials
  std::vector<std::vector<double>> t(rows, std::vector<double>(cols + 1, 0.0));
  for (std::size_t j = 0; j < m; ++j) {
    t[0][j] = others[j].x;
    t[1][j] = others[j].y;
    t[2][j] = others[j].z;
    t[3][j] = w;
  }
  t[3][cols] = w;
  // Right-hand sides (0, 0, 0, w) are non-negative already.
  for (std::size_t r = 0; r < rows; ++r) t[r][m + r] = 1.0;
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = m + r;

  // Reduced costs of the phase-1 objective sum(artificials).
  auto reduced_cost = [&](std::size_t c) {
    double cost = c >= m ? 1.0 : 0.0;
    for (std::size_t r = 0; r < rows; ++r)
      if (basis[r] >= m) cost -= t[r][c];
    return cost;
  };

  constexpr double kPivotEps = 1e-12;
  for (int iter = 0; iter < 10000; ++iter) {
    // Bland's rule: lowest-index improving column, lowest-index ratio tie.
    std::size_t enter = cols;
    for (std::size_t c = 0; c < cols; ++c)
      if (reduced_cost(c) < -kPivotEps) {
        enter = c;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = rows;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < rows; ++r)
      if (t[r][enter] > kPivotEps) {
        const double ratio = t[r][cols] / t[r][enter];
        if (ratio < best_ratio ||
            (ratio == best_ratio && leave < rows && basis[r] < basis[leave])) {
          best_ratio = ratio;
          leave = r;
        }
      }
    if (leave == rows) break;  // unbounded direction; cannot occur in phase 1

    const double piv = t[leave][enter];
    for (double& v : t[leave]) v /= piv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter] == 0.0) continue;
      const double f = t[r][enter];
      for (std::size_t c = 0; c <= cols; ++c) t[r][c] -= f * t[leave][c];
    }
    basis[leave] = enter;
  }

  double infeasibility = 0.0;
  for (std::size_t r = 0; r < rows; ++r)
    if (basis[r] >= m) infeasibility += t[r][cols];
  return infeasibility > tol.absolute();
}

namespace {

Circle circle2(PlaneCoords p, PlaneCoords q) {
  const double a = 0.5 * (p.a + q.a), b = 0.5 * (p.b + q.b);
  return {a, b, 0.5 * std::hypot(p.a - q.a, p.b - q.b)};
}

Circle circle3(PlaneCoords p, PlaneCoords q, PlaneCoords r) {
  const double bx = q.a - p.a, by = q.b - p.b;
  const double cx = r.a - p.a, cy = r.b - p.b;
  const double d = 2.0 * (bx * cy - by * cx);
  if (d == 0.0) {
    // Collinear: widest pair.
    Circle c = circle2(p, q);
    for (Circle alt : {circle2(p, r), circle2(q, r)})
      if (alt.radius > c.radius) c = alt;
    return c;
  }
  const double b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
  const double ux = (cy * b2 - by * c2) / d;
  const double uy = (bx * c2 - cx * b2) / d;
  const double r1 = std::hypot(ux, uy);
  const double r2 = std::hypot(ux - bx, uy - by);
  const double r3 = std::hypot(ux - cx, uy - cy);
  return {p.a + ux, p.b + uy, std::max({r1, r2, r3})};
}

bool inside(const Circle& c, PlaneCoords p) {
  return std::hypot(p.a - c.a, p.b - c.b) <= c.radius * (1.0 + 1e-12) + 1e-15;
}

}  // namespace

Circle min_enclosing_circle(std::span<const PlaneCoords> input) {
  if (input.empty())
    throw Error(ErrorCode::EmptyInput, "min_enclosing_circle: no points");
  std::vector<PlaneCoords> pts(input.begin(), input.end());
  Rng rng(0x5eedc1c1e);
  rng.shuffle(std::span(pts));

  Circle c{pts[0].a, pts[0].b, 0.0};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (inside(c, pts[i])) continue;
    c = {pts[i].a, pts[i].b, 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (inside(c, pts[j])) continue;
      c = circle2(pts[i], pts[j]);
      for (std::size_t k = 0; k < j; ++k)
        if (!inside(c, pts[k])) c = circle3(pts[i], pts[j], pts[k]);
    }
  }
  return c;
}

}  // namespace minisphere::oracle
