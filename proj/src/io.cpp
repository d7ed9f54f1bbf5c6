#include "gns/io.hpp"

namespace gns {
namespace {

Coord parse_coord(std::string_view text) {
  if (text.empty()) throw ParseError("empty coordinate");
  Coord v = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw ParseError("invalid coordinate '" + std::string(text) + "'");
    Coord digit = static_cast<Coord>(c - '0');
    v = checked_add(checked_mul(v, 10), digit);
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

Point parse_point(std::string_view text) {
  CoordVec coords;
  for (std::string_view part : split(text, ',')) coords.push_back(parse_coord(part));
  return Point(std::move(coords));
}

std::vector<Point> parse_point_list(std::string_view text, unsigned dim) {
  std::vector<Point> pts;
  if (text.empty()) return pts;
  for (std::string_view part : split(text, ';')) {
    Point p = parse_point(part);
    if (p.dim() != dim)
      throw ParseError("point '" + std::string(part) + "' does not have dimension " +
                       std::to_string(dim));
    pts.push_back(std::move(p));
  }
  return pts;
}

std::string format_point(const Point& p) {
  std::string s;
  for (unsigned i = 0; i < p.dim(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

std::string format_point_list(const std::vector<Point>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ';';
    s += format_point(pts[i]);
  }
  return s;
}

nlohmann::json to_json(const Gns& s, bool with_min_gens) {
  nlohmann::json j;
  j["dim"] = s.dim();
  auto points = nlohmann::json::array();
  for (const Point& p : s.gaps()) {
    auto row = nlohmann::json::array();
    for (unsigned i = 0; i < p.dim(); ++i) row.push_back(p[i]);
    points.push_back(std::move(row));
  }
  j["gaps"] = std::move(points);
  if (with_min_gens) {
    auto gens = nlohmann::json::array();
    for (const Point& p : s.minimal_generators()) {
      auto row = nlohmann::json::array();
      for (unsigned i = 0; i < p.dim(); ++i) row.push_back(p[i]);
      gens.push_back(std::move(row));
    }
    j["min_gens"] = std::move(gens);
  }
  return j;
}

Gns gns_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("gaps"))
    throw ParseError("expected an object with 'dim' and 'gaps'");
  if (!j["dim"].is_number_unsigned() || j["dim"].get<std::uint64_t>() == 0)
    throw ParseError("'dim' must be a positive integer");
  unsigned dim = j["dim"].get<unsigned>();
  std::vector<Point> gaps;
  for (const auto& row : j["gaps"]) {
    CoordVec c;
    for (const auto& v : row) {
      if (!v.is_number_unsigned()) throw ParseError("gap coordinates must be >= 0");
      c.push_back(v.get<Coord>());
    }
    if (c.size() != dim) throw ParseError("gap dimension does not match 'dim'");
    gaps.emplace_back(std::move(c));
  }
  return Gns::from_gaps(dim, std::move(gaps));
}

}  // namespace gns
