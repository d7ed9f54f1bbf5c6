#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gns/gns.hpp"
#include "gns/point.hpp"

namespace gns {

/// Parse "1,0" into a point. Rejects signs, blanks and empty components.
Point parse_point(std::string_view text);

/// Parse "2,0;3,0;1,1" into points of dimension `dim`; "" is the empty list.
std::vector<Point> parse_point_list(std::string_view text, unsigned dim);

/// "1,0" (no parentheses, matching the command line syntax).
std::string format_point(const Point& p);

/// "0,1;1,1;2,0" in the given order; empty list formats as "".
std::string format_point_list(const std::vector<Point>& pts);

/// Canonical encoding {"dim":2,"gaps":[[1,0],[1,1]]}, gaps sorted
/// lexicographically; optionally extended with "min_gens".
nlohmann::json to_json(const Gns& s, bool with_min_gens = false);

/// Decode and validate a semigroup from its canonical encoding.
Gns gns_from_json(const nlohmann::json& j);

}  // namespace gns
