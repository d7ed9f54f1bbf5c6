#pragma once

#include <boost/container/small_vector.hpp>
#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "gns/errors.hpp"

namespace gns {

using Coord = std::uint64_t;
// Inline storage covers the dimensions the enumeration engines work hardest in.
using CoordVec = boost::container::small_vector<Coord, 4>;

inline Coord checked_add(Coord a, Coord b) {
  Coord r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coordinate sum overflows");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("product overflows");
  return r;
}

/// Lattice point in N^d, d >= 1. Immutable after construction.
/// All coordinate sums are overflow checked.
class Point {
 public:
  Point() = default;  // dimension 0; only valid as a container placeholder

  explicit Point(CoordVec coords) : c_(std::move(coords)) {
    if (c_.empty()) throw InvalidInput("point must have dimension >= 1");
  }

  Point(std::initializer_list<Coord> coords) : c_(coords) {
    if (c_.empty()) throw InvalidInput("point must have dimension >= 1");
  }

  static Point zero(unsigned dim) {
    if (dim == 0) throw InvalidInput("dimension must be >= 1");
    return Point(CoordVec(dim, 0));
  }

  /// The unit point e_axis (1-based axis index).
  static Point unit(unsigned dim, unsigned axis) {
    if (axis == 0 || axis > dim) throw InvalidInput("axis out of range");
    CoordVec c(dim, 0);
    c[axis - 1] = 1;
    return Point(std::move(c));
  }

  unsigned dim() const { return static_cast<unsigned>(c_.size()); }
  Coord operator[](std::size_t i) const { return c_[i]; }
  const CoordVec& coords() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](Coord v) { return v == 0; });
  }

  /// Sum of coordinates (overflow checked).
  Coord degree() const {
    Coord s = 0;
    for (Coord v : c_) s = checked_add(s, v);
    return s;
  }

  Point operator+(const Point& o) const {
    require_same_dim(o);
    CoordVec r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = checked_add(c_[i], o.c_[i]);
    return Point(std::move(r));
  }

  /// Componentwise difference, or nullopt if any coordinate would go negative.
  std::optional<Point> minus(const Point& o) const {
    require_same_dim(o);
    CoordVec r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] < o.c_[i]) return std::nullopt;
      r[i] = c_[i] - o.c_[i];
    }
    return Point(std::move(r));
  }

  bool operator==(const Point& o) const { return c_ == o.c_; }

  /// Canonical container order: coordinatewise lexicographic.
  std::strong_ordering operator<=>(const Point& o) const {
    return std::lexicographical_compare_three_way(c_.begin(), c_.end(), o.c_.begin(),
                                                  o.c_.end());
  }

  void require_same_dim(const Point& o) const {
    if (c_.size() != o.c_.size()) throw DimensionMismatch("points of different dimension");
  }

 private:
  CoordVec c_;
};

inline bool componentwise_leq(const Point& a, const Point& b) {
  a.require_same_dim(b);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// All points p with p <= x componentwise, sorted lexicographically.
/// Cardinality prod(x_i + 1); the volume computation is overflow checked.
inline std::vector<Point> box(const Point& x) {
  std::uint64_t volume = 1;
  for (std::size_t i = 0; i < x.dim(); ++i) volume = checked_mul(volume, checked_add(x[i], 1));
  std::vector<Point> out;
  out.reserve(volume);
  CoordVec cur(x.dim(), 0);
  for (;;) {
    out.emplace_back(cur);
    // odometer increment from the last coordinate, lexicographic emission order
    std::size_t i = x.dim();
    while (i > 0) {
      --i;
      if (cur[i] < x[i]) {
        ++cur[i];
        std::fill(cur.begin() + i + 1, cur.end(), 0);
        break;
      }
      if (i == 0) return out;
    }
  }
}

/// "(1,0)" rendering for diagnostics.
inline std::string to_display(const Point& p) {
  std::string s = "(";
  for (unsigned i = 0; i < p.dim(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  s += ')';
  return s;
}

inline std::size_t hash_value(const Point& p) {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Coord v : p.coords()) {
    h ^= std::hash<Coord>{}(v);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace gns

template <>
struct std::hash<gns::Point> {
  std::size_t operator()(const gns::Point& p) const { return gns::hash_value(p); }
};
