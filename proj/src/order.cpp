#include "gns/order.hpp"

#include <algorithm>

namespace gns {
namespace {

std::strong_ordering lex_compare(const Point& u, const Point& v) {
  return u <=> v;
}

std::strong_ordering graded_lex_compare(const Point& u, const Point& v) {
  if (auto c = u.degree() <=> v.degree(); c != 0) return c;
  return lex_compare(u, v);
}

std::strong_ordering monomial_compare(OrderKind kind, const Point& u, const Point& v) {
  return kind == OrderKind::Lex ? lex_compare(u, v) : graded_lex_compare(u, v);
}

Coord min_coord(const Point& p) {
  Coord m = p[0];
  for (std::size_t i = 1; i < p.dim(); ++i) m = std::min(m, p[i]);
  return m;
}

bool probe_volume_ok(Coord side, unsigned dim, std::uint64_t cap) {
  std::uint64_t vol = 1;
  for (unsigned i = 0; i < dim; ++i) {
    vol *= side + 1;
    if (vol > cap) return false;
  }
  return true;
}

// Points of N^d with coordinate sum exactly `deg`, ascending lexicographically.
void append_degree_slice_lex(unsigned dim, Coord deg, CoordVec& prefix,
                             std::vector<Point>& out) {
  if (prefix.size() + 1 == dim) {
    prefix.push_back(deg);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (Coord c = 0; c <= deg; ++c) {
    prefix.push_back(c);
    append_degree_slice_lex(dim, deg - c, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

RelaxedOrder RelaxedOrder::min_then(unsigned dim, OrderKind inner) {
  if (inner == OrderKind::MinThenMonomial)
    throw InvalidInput("inner order must be a monomial order");
  return {dim, OrderKind::MinThenMonomial, inner};
}

RelaxedOrder RelaxedOrder::by_name(std::string_view name, unsigned dim) {
  if (name == "lex") return lex(dim);
  if (name == "grlex") return graded_lex(dim);
  if (name == "minlex") return min_then(dim, OrderKind::Lex);
  throw ParseError("unknown order name: " + std::string(name));
}

std::string RelaxedOrder::name() const {
  switch (kind_) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::GradedLex:
      return "grlex";
    case OrderKind::MinThenMonomial:
      return inner_ == OrderKind::Lex ? "minlex" : "mingrlex";
  }
  return "?";
}

std::strong_ordering RelaxedOrder::compare(const Point& u, const Point& v) const {
  if (u.dim() != dim_ || v.dim() != dim_)
    throw DimensionMismatch("point dimension does not match order dimension");
  switch (kind_) {
    case OrderKind::Lex:
      return lex_compare(u, v);
    case OrderKind::GradedLex:
      return graded_lex_compare(u, v);
    case OrderKind::MinThenMonomial:
      if (auto c = min_coord(u) <=> min_coord(v); c != 0) return c;
      return monomial_compare(inner_, u, v);
  }
  return std::strong_ordering::equal;
}

std::vector<Point> RelaxedOrder::initial_segment(std::size_t k) const {
  if (k == 0) throw InvalidInput("segment length must be >= 1");
  std::vector<Point> seg;
  seg.reserve(k);
  seg.push_back(Point::zero(dim_));
  if (k > 1) {
    switch (kind_) {
      case OrderKind::Lex:
        // Every point below (0,...,0,j) has all leading coordinates zero, so
        // the smallest points are exactly those supported on the last axis.
        seg.clear();
        for (Coord j = 0; j < k; ++j) {
          CoordVec c(dim_, 0);
          c[dim_ - 1] = j;
          seg.emplace_back(std::move(c));
        }
        break;
      case OrderKind::GradedLex: {
        // Degree slices are finite; walk them in ascending degree.
        seg.clear();
        CoordVec prefix;
        for (Coord deg = 0; seg.size() < k; ++deg)
          append_degree_slice_lex(dim_, deg, prefix, seg);
        seg.resize(k, Point::zero(dim_));
        break;
      }
      case OrderKind::MinThenMonomial:
        throw UnsupportedOrder("initial segments of length >= 2 are not enumerable here");
    }
  }

  // Structural check: strictly ascending, and no probe point outside the
  // segment precedes its last element.
  for (std::size_t i = 0; i + 1 < seg.size(); ++i)
    if (compare(seg[i], seg[i + 1]) >= 0)
      throw InternalInconsistency("initial segment is not strictly increasing");
  Coord side = 1;
  while (side + 1 <= 64 && probe_volume_ok(side + 1, dim_, 65536)) ++side;
  const Point& last = seg.back();
  for (const Point& p : box(Point(CoordVec(dim_, side)))) {
    if (compare(p, last) <= 0 && !std::binary_search(seg.begin(), seg.end(), p,
                                                     [this](const Point& a, const Point& b) {
                                                       return less(a, b);
                                                     }))
      throw InternalInconsistency("probe point precedes the segment end");
  }
  return seg;
}

}  // namespace gns
