#include <cmath>
#include <numbers>

#include "doctest.h"
#include "minisphere/datagen.hpp"
#include "minisphere/error.hpp"
#include "minisphere/frame.hpp"
#include "minisphere/kernels.hpp"
#include "minisphere/oracle.hpp"
#include "support.hpp"

using namespace minisphere;

namespace {

void check_orthonormal(const ProjectionFrame& f) {
  CHECK(std::abs(norm(f.normal) - 1) <= 1e-12);
  CHECK(std::abs(norm(f.u) - 1) <= 1e-12);
  CHECK(std::abs(norm(f.v) - 1) <= 1e-12);
  CHECK(std::abs(dot(f.u, f.v)) <= 1e-12);
  CHECK(std::abs(dot(f.u, f.normal)) <= 1e-12);
  CHECK(std::abs(dot(f.v, f.normal)) <= 1e-12);
  CHECK(dot(cross(f.u, f.v), f.normal) == doctest::Approx(1.0).epsilon(1e-12));
}

}  // namespace

TEST_CASE("make_frame") {
  const auto z = make_frame({0, 0, 1});
  CHECK(z.u == Point3{1, 0, 0});
  CHECK(z.v == Point3{0, 1, 0});

  const auto x = make_frame({1, 0, 0});
  CHECK(x.u == Point3{0, 0, -1});
  check_orthonormal(x);

  const double s = 1 / std::sqrt(3.0);
  check_orthonormal(make_frame({s, s, s}));
  check_orthonormal(make_frame({2, -7, 0.5}));  // renormalized

  CHECK_THROWS_AS(make_frame({0, 0, 0}), Error);
  CHECK_THROWS_AS(make_frame({1e-13, 0, 0}), Error);
}

TEST_CASE("project") {
  const auto z = make_frame({0, 0, 1});
  const auto [a, b] = project({3, 4, 5}, z);
  CHECK(a == 3);
  CHECK(b == 4);

  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto f = make_frame({rng.normal(), rng.normal(), rng.normal()});
    const auto on_axis = project(2.0 * f.normal, f);
    CHECK(std::abs(on_axis.a) <= 1e-12);
    CHECK(std::abs(on_axis.b) <= 1e-12);

    const Point3 p{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const auto c = project(p, f);
    const Point3 rebuilt = c.a * f.u + c.b * f.v + dot(p, f.normal) * f.normal;
    CHECK(dist(rebuilt, p) <= 1e-12);
  }
}

TEST_CASE("projections preserve convex combinations") {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const auto f = make_frame({rng.normal(), rng.normal(), rng.normal()});
    const Point3 p{rng.normal(), rng.normal(), rng.normal()};
    const Point3 q{rng.normal(), rng.normal(), rng.normal()};
    const double t = rng.uniform();
    const auto mix = project((1 - t) * p + t * q, f);
    const auto pp = project(p, f), pq = project(q, f);
    CHECK(std::abs(mix.a - ((1 - t) * pp.a + t * pq.a)) <= 1e-12);
    CHECK(std::abs(mix.b - ((1 - t) * pp.b + t * pq.b)) <= 1e-12);
  }
}

TEST_CASE("generate_orientations") {
  const double s = 1 / std::numbers::sqrt2;
  const auto six = generate_orientations(6);
  REQUIRE(six.size() == 6);
  const std::vector<Point3> expected{{0, 0, 1}, {0, 1, 0}, {1, 0, 0},
                                     {s, s, 0}, {0, s, s}, {s, 0, s}};
  for (std::size_t i = 0; i < 6; ++i) CHECK(dist(six[i].normal, expected[i]) <= 1e-15);

  const auto one = generate_orientations(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].normal == Point3{0, 0, 1});

  const auto hundred = generate_orientations(100);
  REQUIRE(hundred.size() == 100);
  double max_dot = -1;
  for (std::size_t i = 0; i < hundred.size(); ++i) {
    check_orthonormal(hundred[i]);
    CHECK(hundred[i].normal.z > 0);
    for (std::size_t j = i + 1; j < hundred.size(); ++j)
      max_dot = std::max(max_dot, dot(hundred[i].normal, hundred[j].normal));
  }
  CHECK(max_dot < 1 - 1e-6);

  try {
    generate_orientations(0);
    FAIL("expected InvalidK");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidK);
  }
}

TEST_CASE("fibonacci normals are prefix-nested") {
  const auto small = fibonacci_normals(17);
  const auto large = fibonacci_normals(64);
  for (std::size_t i = 0; i < small.size(); ++i) CHECK(small[i] == large[i]);
}

TEST_CASE("extreme4") {
  const auto z = make_frame({0, 0, 1});
  SUBCASE("axis diamond") {
    const std::vector<Point3> pts{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
    CHECK(serial::extreme4(pts, z) == Extremes{0, 1, 2, 3});
  }
  SUBCASE("single point") {
    const std::vector<Point3> pts{{5, 5, 5}};
    CHECK(serial::extreme4(pts, z) == Extremes{0, 0, 0, 0});
    CHECK(omp::extreme4(pts, z) == Extremes{0, 0, 0, 0});
  }
  SUBCASE("cube center is never extreme") {
    const auto pts = minisphere::testing::cube_plus_center();
    for (std::size_t slot : serial::extreme4(pts, z)) CHECK(slot != 8);
  }
  SUBCASE("exact ties go to larger secondary, then signed normal coordinate") {
    // Column x = 1 with three candidates; the larger y wins, then larger z.
    const std::vector<Point3> pts{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {0, 0, 0}};
    CHECK(serial::extreme4(pts, z)[kPlusU] == 2);
    // -v slot: minimum y is 0 for indices 0 and 3; larger x wins -> 0.
    CHECK(serial::extreme4(pts, z)[kMinusV] == 0);
  }
}

TEST_CASE("lexicographic slot winners are hull vertices on degenerate clouds") {
  for (CloudKind kind : {CloudKind::Collinear, CloudKind::CoplanarDisk}) {
    const auto pts = generate(kind, 30, RngSeed{21});
    const Tolerance tol = Tolerance::for_points(pts);
    for (const auto& f : generate_orientations(24))
      for (std::size_t idx : serial::extreme4(pts, f)) {
        CAPTURE(to_string(kind));
        CHECK(oracle::is_hull_vertex(idx, pts, tol));
      }
  }
}

TEST_CASE("serial and OpenMP kernels agree") {
  for (CloudKind kind : kAllKinds) {
    const auto pts = generate(kind, 20000, RngSeed{8});
    const auto frames = generate_orientations(24);
    CHECK(serial::extremes_per_frame(pts, frames) == omp::extremes_per_frame(pts, frames));
    for (const auto& f : frames) CHECK(serial::extreme4(pts, f) == omp::extreme4(pts, f));

    const Sphere probe{{0.1, 0, 0}, 0.9};
    const Tolerance tol = Tolerance::for_points(pts);
    CHECK(serial::find_violators(pts, probe, tol) == omp::find_violators(pts, probe, tol));
  }
}

TEST_CASE("find_violators") {
  const std::vector<Point3> pts{{0, 0, 0}, {2, 0, 0}, {0.5, 0, 0}, {0, -3, 0}};
  const Sphere unit{{0, 0, 0}, 1.0};
  CHECK(serial::find_violators(pts, unit, Tolerance{}) == std::vector<std::size_t>{1, 3});
}
