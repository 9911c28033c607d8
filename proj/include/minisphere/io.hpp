#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "minisphere/geom.hpp"

namespace minisphere::io {

/// csv: "x,y,z" per line, optional header line.
/// xyz: whitespace-separated triples, '#' starts a comment.
/// json: {"points": [[x, y, z], ...]}.
enum class PointFormat { Csv, Xyz, Json };

std::string_view to_string(PointFormat f);

/// Throws Error(InvalidParams) for an unknown name.
PointFormat parse_format(std::string_view name);

/// By extension (.csv, .xyz/.txt, .json); nullopt when unrecognised.
std::optional<PointFormat> format_from_path(const std::filesystem::path& p);

/// Throws Error(ParseError) naming the 1-based line, Error(NonFinite) for
/// nan/inf coordinates.
std::vector<Point3> read_points(std::istream& in, PointFormat format);

/// Format defaults to the extension, then csv.
std::vector<Point3> read_points_file(const std::filesystem::path& path,
                                     std::optional<PointFormat> format = {});

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

void write_points(std::ostream& out, std::span<const Point3> points,
                  PointFormat format);

}  // namespace minisphere::io
