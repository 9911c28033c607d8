#include "minisphere/io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "minisphere/error.hpp"

namespace minisphere::io {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::optional<double> parse_number(std::string_view token) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  if (token.empty()) return std::nullopt;
  double v = 0.0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || end != token.data() + token.size()) return std::nullopt;
  return v;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

Point3 checked(Point3 p, std::size_t line) {
  if (!is_finite(p))
    throw Error(ErrorCode::NonFinite,
                "line " + std::to_string(line) + ": non-finite coordinate");
  return p;
}

std::vector<Point3> read_csv(std::istream& in) {
  std::vector<Point3> out;
  std::string raw;
  std::size_t line = 0;
  bool seen_content = false;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = trim(raw);
    if (text.empty()) continue;
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    for (;;) {
      const std::size_t comma = text.find(',', pos);
      fields.push_back(text.substr(pos, comma == std::string_view::npos
                                            ? std::string_view::npos
                                            : comma - pos));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    const bool first = !seen_content;
    seen_content = true;
    if (fields.size() != 3) fail(line, "expected 3 comma-separated fields");
    std::array<double, 3> v{};
    bool numeric = true;
    for (std::size_t i = 0; i < 3; ++i) {
      const auto x = parse_number(fields[i]);
      if (!x) {
        numeric = false;
        break;
      }
      v[i] = *x;
    }
    if (!numeric) {
      if (first) continue;  // header
      fail(line, "malformed number");
    }
    out.push_back(checked({v[0], v[1], v[2]}, line));
  }
  return out;
}

std::vector<Point3> read_xyz(std::istream& in) {
  std::vector<Point3> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos)
      text = text.substr(0, hash);
    std::istringstream tokens{std::string(text)};
    std::vector<std::string> parts;
    for (std::string t; tokens >> t;) parts.push_back(t);
    if (parts.empty()) continue;
    if (parts.size() != 3) fail(line, "expected 3 whitespace-separated values");
    std::array<double, 3> v{};
    for (std::size_t i = 0; i < 3; ++i) {
      const auto x = parse_number(parts[i]);
      if (!x) fail(line, "malformed number '" + parts[i] + "'");
      v[i] = *x;
    }
    out.push_back(checked({v[0], v[1], v[2]}, line));
  }
  return out;
}

std::vector<Point3> read_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
    throw Error(ErrorCode::ParseError, "line 1: expected {\"points\": [...]}");
  std::vector<Point3> out;
  std::size_t item = 0;
  for (const auto& p : doc["points"]) {
    ++item;
    if (!p.is_array() || p.size() != 3 || !p[0].is_number() ||
        !p[1].is_number() || !p[2].is_number())
      throw Error(ErrorCode::ParseError,
                  "points[" + std::to_string(item - 1) + "]: expected [x, y, z]");
    out.push_back(checked({p[0].get<double>(), p[1].get<double>(), p[2].get<double>()}, item));
  }
  return out;
}

}  // namespace

std::string_view to_string(PointFormat f) {
  switch (f) {
    case PointFormat::Csv: return "csv";
    case PointFormat::Xyz: return "xyz";
    case PointFormat::Json: return "json";
  }
  return "csv";
}

PointFormat parse_format(std::string_view name) {
  if (name == "csv") return PointFormat::Csv;
  if (name == "xyz") return PointFormat::Xyz;
  if (name == "json") return PointFormat::Json;
  throw Error(ErrorCode::InvalidParams, "unknown format '" + std::string(name) + "'");
}

std::optional<PointFormat> format_from_path(const std::filesystem::path& p) {
  std::string ext = p.extension().string();
  for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (ext == ".csv") return PointFormat::Csv;
  if (ext == ".xyz" || ext == ".txt") return PointFormat::Xyz;
  if (ext == ".json") return PointFormat::Json;
  return std::nullopt;
}

std::vector<Point3> read_points(std::istream& in, PointFormat format) {
  switch (format) {
    case PointFormat::Csv: return read_csv(in);
    case PointFormat::Xyz: return read_xyz(in);
    case PointFormat::Json: return read_json(in);
  }
  return {};
}

std::vector<Point3> read_points_file(const std::filesystem::path& path,
                                     std::optional<PointFormat> format) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
  return read_points(in, format.value_or(format_from_path(path).value_or(PointFormat::Csv)));
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

void write_points(std::ostream& out, std::span<const Point3> points,
                  PointFormat format) {
  switch (format) {
    case PointFormat::Csv:
      out << "x,y,z\n";
      for (const Point3& p : points)
        out << format_double(p.x) << ',' << format_double(p.y) << ','
            << format_double(p.z) << '\n';
      break;
    case PointFormat::Xyz:
      for (const Point3& p : points)
        out << format_double(p.x) << ' ' << format_double(p.y) << ' '
            << format_double(p.z) << '\n';
      break;
    case PointFormat::Json: {
      nlohmann::json doc;
      auto& arr = doc["points"] = nlohmann::json::array();
      for (const Point3& p : points) arr.push_back({p.x, p.y, p.z});
      out << doc.dump() << '\n';
      break;
    }
  }
}

}  // namespace minisphere::io
