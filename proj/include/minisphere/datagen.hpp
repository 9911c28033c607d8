#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "minisphere/geom.hpp"
#include "minisphere/welzl.hpp"

namespace minisphere {

enum class CloudKind {
  UniformBall,
  UniformCube,
  Collinear,
  CoplanarDisk,
  CoSpherical,
  Clustered,
  NearDegenerate,
};

inline constexpr CloudKind kAllKinds[] = {
    CloudKind::UniformBall,  CloudKind::UniformCube, CloudKind::Collinear,
    CloudKind::CoplanarDisk, CloudKind::CoSpherical, CloudKind::Clustered,
    CloudKind::NearDegenerate};

struct GenParams {
  double radius = 1.0;        // ball, cube half-width, disk, shell, cluster field
  double length = 2.0;        // collinear parameter range
  double plane_offset = 0.0;  // coplanar-disk / near-degenerate: plane z = offset
  double sigma = 1e-8;        // near-degenerate jitter (per coordinate)
  std::size_t clusters = 5;
  double spread = 0.05;       // cluster std-dev, relative to radius
};

std::string_view to_string(CloudKind kind);

/// Throws Error(UnknownKind).
CloudKind parse_kind(std::string_view name);

/// Deterministic in (kind, n, seed, params). Degenerate kinds hold their
/// constraint exactly in double precision:
///   collinear     every point is t * d with d's nonzero components of equal
///                 magnitude, so pairwise cross products vanish exactly;
///   coplanar-disk z == plane_offset;
///   co-spherical  unit directions scaled by radius about the origin.
/// near-degenerate is coplanar-disk plus N(0, sigma) jitter on every axis.
/// Throws InvalidParams (n == 0, sigma < 0, non-positive sizes).
std::vector<Point3> generate(CloudKind kind, std::size_t n, RngSeed seed,
                             const GenParams& params = {});

}  // namespace minisphere
