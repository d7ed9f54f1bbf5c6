#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gns/point.hpp"

namespace gns {

enum class OrderKind { Lex, GradedLex, MinThenMonomial };

/// A relaxed monomial order on N^d: a total order with 0 as minimum such that
/// v <= w implies v <= w + u for every u. Monomial orders (Lex, GradedLex)
/// qualify; MinThenMonomial compares the smallest coordinate first and breaks
/// ties with an inner monomial order, and is relaxed but not monomial.
class RelaxedOrder {
 public:
  static RelaxedOrder lex(unsigned dim) { return {dim, OrderKind::Lex, OrderKind::Lex}; }
  static RelaxedOrder graded_lex(unsigned dim) {
    return {dim, OrderKind::GradedLex, OrderKind::Lex};
  }
  static RelaxedOrder min_then(unsigned dim, OrderKind inner = OrderKind::Lex);

  /// Names accepted on the command line: "lex", "grlex", "minlex".
  static RelaxedOrder by_name(std::string_view name, unsigned dim);
  std::string name() const;

  unsigned dim() const { return dim_; }
  OrderKind kind() const { return kind_; }

  std::strong_ordering compare(const Point& u, const Point& v) const;
  bool less(const Point& u, const Point& v) const { return compare(u, v) < 0; }

  /// The k smallest points of N^d in this order, ascending; element 0 is the
  /// origin. The segment is built from the order's structure and then checked:
  /// consecutive elements must be strictly increasing and no point of a probe
  /// box outside the segment may precede the last element. MinThenMonomial has
  /// no finite initial segments beyond {0}, so k >= 2 raises UnsupportedOrder.
  std::vector<Point> initial_segment(std::size_t k) const;

 private:
  RelaxedOrder(unsigned dim, OrderKind kind, OrderKind inner)
      : dim_(dim), kind_(kind), inner_(inner) {
    if (dim == 0) throw InvalidInput("dimension must be >= 1");
  }

  unsigned dim_;
  OrderKind kind_;
  OrderKind inner_;  // tie break for MinThenMonomial
};

}  // namespace gns
