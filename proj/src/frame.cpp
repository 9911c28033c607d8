#include "minisphere/frame.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "minisphere/error.hpp"

namespace minisphere {

ProjectionFrame make_frame(Point3 normal) {
  const double len = norm(normal);
  if (!(len > 1e-12))
    throw Error(ErrorCode::ZeroNormal, "make_frame: zero-length normal");
  const Point3 n = normal / len;

  const std::array<double, 3> mag{std::abs(n.x), std::abs(n.y), std::abs(n.z)};
  constexpr std::array<std::size_t, 3> preference{1, 0, 2};
  std::size_t axis = preference[0];
  for (std::size_t i : preference)
    if (mag[i] < mag[axis]) axis = i;

  Point3 e;
  (axis == 0 ? e.x : axis == 1 ? e.y : e.z) = 1.0;
  const Point3 w = cross(e, n);
  const Point3 u = w / norm(w);
  return {n, u, cross(n, u)};
}

std::vector<Point3> canonical_normals() {
  const double s = 1.0 / std::numbers::sqrt2;
  return {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {s, s, 0}, {0, s, s}, {s, 0, s}};
}

namespace {

double van_der_corput(std::size_t i) {
  double result = 0.0;
  double place = 0.5;
  for (; i != 0; i >>= 1, place *= 0.5)
    if (i & 1U) result += place;
  return result;
}

}  // namespace

std::vector<Point3> fibonacci_normals(std::size_t k) {
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<Point3> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double z = 1.0 - van_der_corput(i);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * static_cast<double>(i);
    out.push_back({r * std::cos(phi), r * std::sin(phi), z});
  }
  return out;
}

std::vector<ProjectionFrame> generate_orientations(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidK, "k must be at least 1");
  const auto normals = k == 6 ? canonical_normals() : fibonacci_normals(k);
  std::vector<ProjectionFrame> frames;
  frames.reserve(normals.size());
  for (const Point3& n : normals) frames.push_back(make_frame(n));
  return frames;
}

}  // namespace minisphere
