#include <cmath>

#include "doctest.h"
#include "minisphere/datagen.hpp"
#include "minisphere/error.hpp"
#include "minisphere/oracle.hpp"
#include "support.hpp"

using namespace minisphere;

TEST_CASE("brute_force_ses fixtures") {
  const std::vector<Point3> pair{{0, 0, 0}, {2, 0, 0}};
  const Sphere s = oracle::brute_force_ses(pair, Tolerance::for_points(pair));
  CHECK(dist(s.center, {1, 0, 0}) <= 1e-12);
  CHECK(s.radius == doctest::Approx(1.0));

  const auto cube = minisphere::testing::unit_cube_corners();
  CHECK(oracle::brute_force_ses(cube, Tolerance::for_points(cube)).radius ==
        doctest::Approx(std::sqrt(3.0) / 2));

  const std::vector<Point3> one{{1, 2, 3}};
  CHECK(oracle::brute_force_ses(one, Tolerance{}).radius == 0.0);
}

TEST_CASE("brute_force_ses internal consistency on 40 ball points") {
  const auto pts = generate(CloudKind::UniformBall, 40, RngSeed{7});
  const Tolerance tol = Tolerance::for_points(pts);
  const Sphere s = oracle::brute_force_ses(pts, tol);
  // Frozen from this oracle on this cloud.
  CHECK(s.radius == doctest::Approx(0.96832889218113949).epsilon(1e-12));

  double diameter = 0;
  for (const Point3& p : pts)
    for (const Point3& q : pts) diameter = std::max(diameter, dist(p, q));
  CHECK(s.radius >= diameter / 2 - 1e-12);
  for (const Point3& p : pts) CHECK(contains(s, p, tol));

  // No enclosing pair or triple sphere is smaller.
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Sphere pair = sphere_from_two(pts[i], pts[j]);
      bool encloses = true;
      for (const Point3& p : pts) encloses = encloses && contains(pair, p, tol);
      if (encloses) CHECK(pair.radius >= s.radius - 1e-12);
    }
}

TEST_CASE("brute_force_ses errors") {
  CHECK_THROWS_AS(oracle::brute_force_ses({}, Tolerance{}), Error);
  const auto big = generate(CloudKind::UniformBall, 81, RngSeed{1});
  try {
    oracle::brute_force_ses(big, Tolerance{});
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("is_hull_vertex fixtures") {
  auto pts = minisphere::testing::cube_plus_center();
  const Tolerance tol = Tolerance::for_points(pts);
  for (std::size_t i = 0; i < 8; ++i) CHECK(oracle::is_hull_vertex(i, pts, tol));
  CHECK_FALSE(oracle::is_hull_vertex(8, pts, tol));

  auto edge = minisphere::testing::unit_cube_corners();
  edge.push_back({0.5, 0, 0});
  CHECK_FALSE(oracle::is_hull_vertex(8, edge, tol));

  auto face = minisphere::testing::unit_cube_corners();
  face.push_back({0.3, 0.6, 1.0});
  CHECK_FALSE(oracle::is_hull_vertex(8, face, tol));

  auto outside = minisphere::testing::unit_cube_corners();
  outside.push_back({0.5, 0.5, 1.0 + 1e-6});
  CHECK(oracle::is_hull_vertex(8, outside, tol));

  auto banded = minisphere::testing::unit_cube_corners();
  banded.push_back({0.5, 0.5, 1.0 + 1e-10});
  CHECK_FALSE(oracle::is_hull_vertex(8, banded, tol));
  CHECK(oracle::is_hull_vertex(8, banded, Tolerance{1e-13, tol.scale}));

  const auto big = generate(CloudKind::UniformBall, 61, RngSeed{1});
  CHECK_THROWS_AS(oracle::is_hull_vertex(0, big, tol), Error);
}

TEST_CASE("is_hull_vertex agrees with an independent support-direction check") {
  // A point that is the unique maximiser of some direction is a vertex.
  Rng rng(31);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto pts = generate(CloudKind::UniformBall, 40, RngSeed{seed});
    const Tolerance tol = Tolerance::for_points(pts);
    for (int trial = 0; trial < 20; ++trial) {
      const Point3 d{rng.normal(), rng.normal(), rng.normal()};
      std::size_t best = 0;
      for (std::size_t i = 1; i < pts.size(); ++i)
        if (dot(pts[i], d) > dot(pts[best], d)) best = i;
      CHECK(oracle::is_hull_vertex(best, pts, tol));
    }
    // The centroid of the cloud, appended, is never a vertex.
    std::vector<Point3> with_centroid = pts;
    Point3 c{};
    for (const Point3& p : pts) c = c + p / double(pts.size());
    with_centroid.push_back(c);
    CHECK_FALSE(oracle::is_hull_vertex(pts.size(), with_centroid, tol));
  }
}

TEST_CASE("min_enclosing_circle") {
  const std::vector<PlaneCoords> tri{{0, 0}, {2, 0}, {1, 0.1}};
  const auto c = oracle::min_enclosing_circle(tri);
  CHECK(c.a == doctest::Approx(1.0));
  CHECK(c.radius == doctest::Approx(1.0));

  const std::vector<PlaneCoords> eq{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};
  CHECK(oracle::min_enclosing_circle(eq).radius == doctest::Approx(1 / std::sqrt(3.0)));
  CHECK_THROWS_AS(oracle::min_enclosing_circle({}), Error);
}
