#include "minisphere/welzl.hpp"

#include <array>
#include <cassert>
#include <limits>
#include <list>
#include <numeric>

#include "minisphere/error.hpp"
#include "minisphere/rng.hpp"

namespace minisphere {
namespace {

struct Tagged {
  Point3 p;
  std::size_t index = 0;
};

struct Ball {
  Sphere sphere;
  std::array<std::size_t, 4> support{};
  std::size_t count = 0;
  bool empty = true;

  bool holds(Point3 p, const Tolerance& tol) const {
    return !empty && contains(sphere, p, tol);
  }
};

Ball make_ball(const Sphere& s, std::initializer_list<Tagged> support) {
  Ball b;
  b.sphere = s;
  b.empty = false;
  for (const Tagged& t : support) b.support[b.count++] = t.index;
  return b;
}

Ball farthest_pair_ball(std::span<const Tagged> pts) {
  std::size_t bi = 0, bj = 1;
  double best = -1.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double d = dist2(pts[i].p, pts[j].p);
      if (d > best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  return make_ball(sphere_from_two(pts[bi].p, pts[bj].p), {pts[bi], pts[bj]});
}

Ball boundary_ball(std::span<const Tagged> b, const Tolerance& tol);

// Coplanar quadruple: smallest pair or triple sphere that encloses all four.
Ball coplanar_fallback(std::span<const Tagged> b, const Tolerance& tol) {
  Ball best;
  double best_r = std::numeric_limits<double>::infinity();
  Ball loosest;
  double loosest_r = std::numeric_limits<double>::infinity();

  auto consider = [&](const Ball& cand) {
    double need2 = 0.0;
    bool encloses = true;
    for (const Tagged& t : b) {
      need2 = std::max(need2, dist2(cand.sphere.center, t.p));
      encloses = encloses && contains(cand.sphere, t.p, tol);
    }
    if (encloses && cand.sphere.radius < best_r) {
      best = cand;
      best_r = cand.sphere.radius;
    }
    const double need = std::max(cand.sphere.radius, std::sqrt(need2));
    if (need < loosest_r) {
      loosest = cand;
      loosest.sphere.radius = need;
      loosest_r = need;
    }
  };

  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      consider(make_ball(sphere_from_two(b[i].p, b[j].p), {b[i], b[j]}));
  for (std::size_t skip = 0; skip < 4; ++skip) {
    std::array<Tagged, 3> tri;
    std::size_t n = 0;
    for (std::size_t i = 0; i < 4; ++i)
      if (i != skip) tri[n++] = b[i];
    consider(boundary_ball(tri, tol));
  }
  // Only reachable through rounding; inflate the tightest candidate.
  return best.empty ? loosest : best;
}

Ball boundary_ball(std::span<const Tagged> b, const Tolerance& tol) {
  switch (b.size()) {
    case 0:
      return Ball{};
    case 1:
      return make_ball(Sphere{b[0].p, 0.0}, {b[0]});
    case 2:
      return make_ball(sphere_from_two(b[0].p, b[1].p), {b[0], b[1]});
    case 3:
      if (auto s = sphere_from_three(b[0].p, b[1].p, b[2].p, tol))
        return make_ball(*s, {b[0], b[1], b[2]});
      return farthest_pair_ball(b);
    default:
      assert(b.size() == 4);
      if (auto s = sphere_from_four(b[0].p, b[1].p, b[2].p, b[3].p, tol))
        return make_ball(*s, {b[0], b[1], b[2], b[3]});
      return coplanar_fallback(b, tol);
  }
}

class MoveToFront {
 public:
  MoveToFront(std::span<const Point3> points, const Tolerance& tol)
      : points_(points), tol_(tol) {}

  std::list<std::size_t>& order() { return order_; }

  void push_boundary(Tagged t) { boundary_[count_++] = t; }

  const Ball& ball() const { return ball_; }

  void run() { run(order_.end()); }

 private:
  void run(std::list<std::size_t>::iterator end) {
    ball_ = boundary_ball(std::span(boundary_.data(), count_), tol_);
    if (count_ == 4) return;
    for (auto it = order_.begin(); it != end;) {
      const auto next = std::next(it);
      const std::size_t i = *it;
      if (!ball_.holds(points_[i], tol_)) {
        push_boundary({points_[i], i});
        run(it);
        --count_;
        order_.splice(order_.begin(), order_, it);
      }
      it = next;
    }
  }

  std::span<const Point3> points_;
  Tolerance tol_;
  std::list<std::size_t> order_;
  std::array<Tagged, 4> boundary_{};
  std::size_t count_ = 0;
  Ball ball_;
};

constexpr int kMaxPasses = 4;

// Re-runs move-to-front while a final scan still finds escaped points. Exact
// arithmetic never needs a second pass; it absorbs rounding in ill-posed
// supports.
Ball solve_verified(MoveToFront& mtf, std::span<const Point3> points,
                    const Tolerance& tol) {
  for (int pass = 0;; ++pass) {
    mtf.run();
    Ball ball = mtf.ball();
    auto& order = mtf.order();
    bool clean = true;
    for (auto it = order.begin(); it != order.end();) {
      const auto next = std::next(it);
      if (!ball.holds(points[*it], tol)) {
        clean = false;
        order.splice(order.begin(), order, it);
      }
      it = next;
    }
    if (clean) return ball;
    if (pass + 1 == kMaxPasses) {
      double r2 = 0.0;
      for (const Point3& p : points)
        r2 = std::max(r2, dist2(ball.sphere.center, p));
      ball.sphere.radius = std::max(ball.sphere.radius, std::sqrt(r2));
      ball.empty = false;
      return ball;
    }
  }
}

}  // namespace

WelzlResult welzl_solve(std::span<const Point3> points, RngSeed seed,
                        const Tolerance& tol) {
  if (points.empty())
    throw Error(ErrorCode::EmptyInput, "welzl_solve: no points");

  std::vector<std::size_t> perm(points.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rng rng(seed.value);
  rng.shuffle(std::span(perm));

  MoveToFront mtf(points, tol);
  mtf.order().assign(perm.begin(), perm.end());
  const Ball ball = solve_verified(mtf, points, tol);

  WelzlResult result;
  result.sphere = ball.sphere;
  result.support.indices.assign(ball.support.begin(),
                                ball.support.begin() + ball.count);
  return result;
}

Sphere min_sphere_with_boundary(std::span<const Point3> points,
                                std::span<const Point3> boundary,
                                const Tolerance& tol) {
  if (boundary.size() > 4)
    throw Error(ErrorCode::InvalidParams,
                "min_sphere_with_boundary: boundary holds at most 4 points");

  // Boundary points are appended after the free points so Tagged indices
  // stay meaningful into one combined list.
  std::vector<Point3> all(points.begin(), points.end());
  all.insert(all.end(), boundary.begin(), boundary.end());

  MoveToFront mtf(all, tol);
  for (std::size_t i = 0; i < boundary.size(); ++i)
    mtf.push_boundary({boundary[i], points.size() + i});
  for (std::size_t i = 0; i < points.size(); ++i) mtf.order().push_back(i);
  mtf.run();
  const Ball& ball = mtf.ball();
  return ball.empty ? Sphere{} : ball.sphere;
}

}  // namespace minisphere
