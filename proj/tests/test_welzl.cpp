#include <cmath>
#include <numbers>

#include "doctest.h"
#include "minisphere/datagen.hpp"
#include "minisphere/error.hpp"
#include "minisphere/oracle.hpp"
#include "minisphere/welzl.hpp"
#include "support.hpp"

using namespace minisphere;
using minisphere::testing::rel_err;

namespace {

void check_support_on_boundary(const WelzlResult& r, std::span<const Point3> pts,
                               const Tolerance& tol) {
  CHECK(r.support.indices.size() <= 4);
  for (std::size_t idx : r.support.indices)
    CHECK(std::abs(dist(pts[idx], r.sphere.center) - r.sphere.radius) <= tol.absolute());
}

void check_encloses(const Sphere& s, std::span<const Point3> pts, const Tolerance& tol) {
  for (const Point3& p : pts) REQUIRE(contains(s, p, tol));
}

}  // namespace

TEST_CASE("unit cube corners") {
  const auto cube = minisphere::testing::unit_cube_corners();
  const Tolerance tol = Tolerance::for_points(cube);
  const auto r = welzl_solve(cube, RngSeed{1}, tol);
  CHECK(dist(r.sphere.center, {0.5, 0.5, 0.5}) <= 1e-12);
  CHECK(r.sphere.radius == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
  check_support_on_boundary(r, cube, tol);
}

TEST_CASE("collinear triple returns the interval sphere") {
  const std::vector<Point3> pts{{0, 0, 0}, {0.3, 0, 0}, {1, 0, 0}};
  const Tolerance tol = Tolerance::for_points(pts);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = welzl_solve(pts, RngSeed{seed}, tol);
    CHECK(dist(r.sphere.center, {0.5, 0, 0}) <= 1e-12);
    CHECK(r.sphere.radius == doctest::Approx(0.5).epsilon(1e-12));
    auto support = r.support.indices;
    std::sort(support.begin(), support.end());
    CHECK(support == std::vector<std::size_t>{0, 2});
  }
}

TEST_CASE("30 ball points, seed 42, agree with the brute-force oracle") {
  const auto pts = generate(CloudKind::UniformBall, 30, RngSeed{42});
  const Tolerance tol = Tolerance::for_points(pts);
  // Frozen from oracle::brute_force_ses on this cloud.
  constexpr double kOracleRadius = 0.96450218334017856;
  const auto r = welzl_solve(pts, RngSeed{42}, tol);
  CHECK(rel_err(r.sphere.radius, kOracleRadius) <= 1e-9);
  CHECK(rel_err(r.sphere.radius, oracle::brute_force_ses(pts, tol).radius) <= 1e-9);
  check_encloses(r.sphere, pts, tol);
  check_support_on_boundary(r, pts, tol);
}

TEST_CASE("single point and duplicates") {
  const std::vector<Point3> one{{3, -2, 7}};
  const auto r = welzl_solve(one, RngSeed{0}, Tolerance::for_points(one));
  CHECK(r.sphere.radius == 0.0);
  CHECK(r.sphere.center == Point3{3, -2, 7});

  const std::vector<Point3> dup(50, Point3{1, 1, 1});
  const auto d = welzl_solve(dup, RngSeed{0}, Tolerance::for_points(dup));
  CHECK(d.sphere.radius == 0.0);
}

TEST_CASE("empty input") {
  std::vector<Point3> none;
  try {
    welzl_solve(none, RngSeed{0}, Tolerance{});
    FAIL("expected EmptyInput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyInput);
  }
}

TEST_CASE("min_sphere_with_boundary") {
  const Tolerance tol{};
  SUBCASE("two boundary points, no free points") {
    const std::vector<Point3> b{{0, 0, 0}, {2, 0, 0}};
    const Sphere s = min_sphere_with_boundary({}, b, tol);
    CHECK(dist(s.center, {1, 0, 0}) <= 1e-12);
    CHECK(s.radius == doctest::Approx(1.0));
  }
  SUBCASE("collinear boundary triple falls back to the extremes") {
    const std::vector<Point3> b{{0, 0, 0}, {0.25, 0, 0}, {1, 0, 0}};
    const Sphere s = min_sphere_with_boundary({}, b, tol);
    CHECK(dist(s.center, {0.5, 0, 0}) <= 1e-12);
    CHECK(s.radius == doctest::Approx(0.5));
  }
  SUBCASE("coplanar square boundary gives the planar circle") {
    const std::vector<Point3> b{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
    const Sphere s = min_sphere_with_boundary({}, b, tol);
    CHECK(dist(s.center, {0.5, 0.5, 0}) <= 1e-12);
    CHECK(s.radius == doctest::Approx(std::sqrt(2.0) / 2));
  }
  SUBCASE("free points force growth around a fixed boundary point") {
    const std::vector<Point3> b{{0, 0, 0}};
    const std::vector<Point3> free{{4, 0, 0}, {1, 0.5, 0}};
    const Sphere s = min_sphere_with_boundary(free, b, tol);
    CHECK(dist(s.center, {2, 0, 0}) <= 1e-12);
    CHECK(s.radius == doctest::Approx(2.0));
  }
  SUBCASE("more than four boundary points") {
    const std::vector<Point3> b(5, Point3{});
    CHECK_THROWS_AS(min_sphere_with_boundary({}, b, tol), Error);
  }
}

TEST_CASE("property: determinism") {
  const auto pts = generate(CloudKind::Clustered, 2000, RngSeed{5});
  const Tolerance tol = Tolerance::for_points(pts);
  const auto a = welzl_solve(pts, RngSeed{77}, tol);
  const auto b = welzl_solve(pts, RngSeed{77}, tol);
  CHECK(a.sphere.center == b.sphere.center);
  CHECK(a.sphere.radius == b.sphere.radius);
  CHECK(a.support.indices == b.support.indices);
}

TEST_CASE("property: enclosure, support and oracle minimality over all kinds") {
  std::uint64_t seed = 100;
  for (CloudKind kind : kAllKinds)
    for (std::size_t n : {2, 5, 17, 40, 60}) {
      CAPTURE(to_string(kind));
      CAPTURE(n);
      const auto pts = generate(kind, n, RngSeed{++seed});
      const Tolerance tol = Tolerance::for_points(pts);
      const auto r = welzl_solve(pts, RngSeed{seed}, tol);
      check_encloses(r.sphere, pts, tol);
      check_support_on_boundary(r, pts, tol);
      const Sphere o = oracle::brute_force_ses(pts, tol);
      CHECK(std::abs(r.sphere.radius - o.radius) <= 1e-9 * std::max(o.radius, 1.0));
    }
}

TEST_CASE("property: support points are hull vertices") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const CloudKind kind = kAllKinds[seed % std::size(kAllKinds)];
    const auto pts = generate(kind, 30, RngSeed{seed});
    const Tolerance tol = Tolerance::for_points(pts);
    const auto r = welzl_solve(pts, RngSeed{seed}, tol);
    for (std::size_t idx : r.support.indices) {
      CAPTURE(to_string(kind));
      CHECK(oracle::is_hull_vertex(idx, pts, tol));
    }
  }
}

TEST_CASE("large degenerate inputs") {
  SUBCASE("co-spherical shell") {
    const auto pts = generate(CloudKind::CoSpherical, 100000, RngSeed{9});
    const auto r = welzl_solve(pts, RngSeed{9}, Tolerance::for_points(pts));
    CHECK(rel_err(r.sphere.radius, 1.0) <= 1e-9);
  }
  SUBCASE("collinear chain") {
    const auto pts = generate(CloudKind::Collinear, 100000, RngSeed{9});
    const auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(), [](Point3 a, Point3 b) {
      return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
    });
    const auto r = welzl_solve(pts, RngSeed{9}, Tolerance::for_points(pts));
    CHECK(rel_err(r.sphere.radius, dist(*lo, *hi) / 2) <= 1e-9);
  }
}
