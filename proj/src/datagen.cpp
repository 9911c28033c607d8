#include "minisphere/datagen.hpp"

#include <array>
#include <cmath>
#include <string>

#include "minisphere/error.hpp"
#include "minisphere/rng.hpp"

namespace minisphere {
namespace {

constexpr std::array<std::pair<CloudKind, std::string_view>, 7> kNames{{
    {CloudKind::UniformBall, "uniform-ball"},
    {CloudKind::UniformCube, "uniform-cube"},
    {CloudKind::Collinear, "collinear"},
    {CloudKind::CoplanarDisk, "coplanar-disk"},
    {CloudKind::CoSpherical, "co-spherical"},
    {CloudKind::Clustered, "clustered"},
    {CloudKind::NearDegenerate, "near-degenerate"},
}};

Point3 in_unit_ball(Rng& rng) {
  for (;;) {
    const Point3 p{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    if (norm2(p) <= 1.0) return p;
  }
}

Point3 on_unit_sphere(Rng& rng) {
  for (;;) {
    const Point3 g{rng.normal(), rng.normal(), rng.normal()};
    const double len = norm(g);
    if (len > 1e-6) return g / len;
  }
}

// Line directions whose nonzero components share one magnitude.
Point3 line_direction(Rng& rng) {
  static constexpr std::array<std::array<int, 3>, 13> kDirs{{
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, -1, 0},
      {0, 1, 1}, {0, 1, -1}, {1, 0, 1}, {-1, 0, 1}, {1, 1, 1},
      {1, 1, -1}, {1, -1, 1}, {-1, 1, 1}}};
  const auto& d = kDirs[rng.below(kDirs.size())];
  const int nonzero = std::abs(d[0]) + std::abs(d[1]) + std::abs(d[2]);
  const double c = 1.0 / std::sqrt(static_cast<double>(nonzero));
  return {d[0] * c, d[1] * c, d[2] * c};
}

}  // namespace

std::string_view to_string(CloudKind kind) {
  for (const auto& [k, name] : kNames)
    if (k == kind) return name;
  return "unknown";
}

CloudKind parse_kind(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  throw Error(ErrorCode::UnknownKind,
              "unknown cloud kind '" + std::string(name) + "'");
}

std::vector<Point3> generate(CloudKind kind, std::size_t n, RngSeed seed,
                             const GenParams& params) {
  if (n == 0) throw Error(ErrorCode::InvalidParams, "n must be at least 1");
  if (!(params.sigma >= 0.0))
    throw Error(ErrorCode::InvalidParams, "sigma must be non-negative");
  if (!(params.radius > 0.0) || !(params.length > 0.0) ||
      !(params.spread >= 0.0) || params.clusters == 0)
    throw Error(ErrorCode::InvalidParams, "radius, length, clusters must be positive");

  Rng rng(seed.value);
  const double r = params.radius;
  std::vector<Point3> out;
  out.reserve(n);

  switch (kind) {
    case CloudKind::UniformBall:
      for (std::size_t i = 0; i < n; ++i) out.push_back(r * in_unit_ball(rng));
      break;
    case CloudKind::UniformCube:
      for (std::size_t i = 0; i < n; ++i)
        out.push_back({rng.uniform(-r, r), rng.uniform(-r, r), rng.uniform(-r, r)});
      break;
    case CloudKind::Collinear: {
      const Point3 d = line_direction(rng);
      const double t0 = rng.uniform(-params.length, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        const double t = t0 + params.length * rng.uniform();
        out.push_back({t * d.x, t * d.y, t * d.z});
      }
      break;
    }
    case CloudKind::CoplanarDisk:
    case CloudKind::NearDegenerate:
      for (std::size_t i = 0; i < n; ++i) {
        double a, b;
        do {
          a = rng.uniform(-1, 1);
          b = rng.uniform(-1, 1);
        } while (a * a + b * b > 1.0);
        out.push_back({r * a, r * b, params.plane_offset});
      }
      if (kind == CloudKind::NearDegenerate)
        for (Point3& p : out)
          p = p + params.sigma * Point3{rng.normal(), rng.normal(), rng.normal()};
      break;
    case CloudKind::CoSpherical:
      for (std::size_t i = 0; i < n; ++i) out.push_back(r * on_unit_sphere(rng));
      break;
    case CloudKind::Clustered: {
      std::vector<Point3> centers;
      for (std::size_t c = 0; c < params.clusters; ++c)
        centers.push_back(r * in_unit_ball(rng));
      const double s = params.spread * r;
      for (std::size_t i = 0; i < n; ++i) {
        const Point3 c = centers[rng.below(centers.size())];
        out.push_back(c + s * Point3{rng.normal(), rng.normal(), rng.normal()});
      }
      break;
    }
  }
  return out;
}

}  // namespace minisphere
