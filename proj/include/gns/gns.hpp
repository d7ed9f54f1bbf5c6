#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gns/order.hpp"
#include "gns/point.hpp"

namespace gns {

/// The complement of the gap set is not closed under addition; `gap` has a
/// decomposition gap = part + (gap - part) with both parts outside the gaps.
struct NotAMonoid : Error {
  Point gap, part;
  NotAMonoid(Point h, Point x)
      : Error("not a monoid complement: " + to_display(h) + " = " + to_display(x) +
              " + " + to_display(*h.minus(x)) + " with both summands in the monoid"),
        gap(std::move(h)),
        part(std::move(x)) {}
};

struct NotAMinimalGenerator : Error {
  Point value;
  explicit NotAMinimalGenerator(Point v)
      : Error(to_display(v) + " is not a minimal generator"), value(std::move(v)) {}
};

struct NotASpecialGap : Error {
  Point value;
  explicit NotASpecialGap(Point h)
      : Error(to_display(h) + " is not a special gap"), value(std::move(h)) {}
};

/// Largest gap in a relaxed order. The full lattice N^d has no gaps; that case
/// is a tagged sentinel, conventionally printed (-1,...,-1), never a Point.
struct FrobeniusValue {
  std::optional<Point> at;

  bool is_sentinel() const { return !at.has_value(); }
  std::string display(unsigned dim) const;
};

/// Submonoid of N^d with finite complement (a generalized numerical
/// semigroup), represented by its gap set, lexicographically sorted.
/// Immutable; operations return new values. The minimal generator cache is
/// filled lazily; concurrent fills compute the same value and one wins.
class Gns {
 public:
  Gns(const Gns& o);
  Gns(Gns&& o) noexcept;
  Gns& operator=(Gns o) noexcept;
  ~Gns();

  /// Validating constructor. For every gap h, every point x below h that is
  /// not itself a gap must have h - x a gap; otherwise the complement is not
  /// closed under addition and NotAMonoid names the witness.
  static Gns from_gaps(unsigned dim, std::vector<Point> gaps);

  static Gns all_of_nd(unsigned dim) { return Gns(dim, {}); }

  /// Trusts the caller that `sorted_gaps` is a valid, lexicographically
  /// sorted, duplicate-free gap set. Used by the enumeration engines whose
  /// transitions preserve validity by construction.
  static Gns trusted(unsigned dim, std::vector<Point> sorted_gaps) {
    return Gns(dim, std::move(sorted_gaps));
  }

  unsigned dim() const { return dim_; }
  std::uint64_t genus() const { return gaps_.size(); }
  const std::vector<Point>& gaps() const { return gaps_; }
  bool is_all_of_nd() const { return gaps_.empty(); }

  bool contains(const Point& x) const;

  /// Minimal generating set (the atoms), lexicographically sorted.
  const std::vector<Point>& minimal_generators() const;

  /// Smallest nonzero element in `ord`; always a minimal generator.
  Point multiplicity(const RelaxedOrder& ord) const;

  FrobeniusValue frobenius_element(const RelaxedOrder& ord) const;

  /// Gaps h with h + s in S for every nonzero s in S (tested via generators).
  std::vector<Point> pseudo_frobenius() const;

  /// Pseudo-Frobenius gaps h with 2h in S: exactly the gaps whose adjunction
  /// keeps the complement closed under addition.
  std::vector<Point> special_gaps() const;

  /// Minimal generators that follow the Frobenius element in `ord`. Removing
  /// one yields a semigroup of genus + 1 whose Frobenius element is the
  /// removed generator; these are the descent edges of the genus tree.
  std::vector<Point> unbounded_generators(const RelaxedOrder& ord) const;

  Gns remove_minimal_generator(const Point& v) const;
  Gns add_special_gap(const Point& h) const;

  /// F precedes the multiplicity in `ord`, i.e. S is the unique semigroup of
  /// its genus whose gaps form an initial segment of the order.
  bool is_ordinary(const RelaxedOrder& ord) const;

  /// Swap the Frobenius element in for the multiplicity (identity when
  /// already ordinary). Preserves the genus; iterating reaches the ordinary
  /// semigroup in at most genus steps.
  Gns ordinarization(const RelaxedOrder& ord) const;

  bool operator==(const Gns& o) const { return dim_ == o.dim_ && gaps_ == o.gaps_; }

  /// Install a precomputed minimal generating set (lex-sorted). Trusted.
  void prime_generator_cache(std::vector<Point> gens) const;

 private:
  Gns(unsigned dim, std::vector<Point> sorted_gaps);

  unsigned dim_;
  std::vector<Point> gaps_;
  mutable std::atomic<const std::vector<Point>*> min_gens_{nullptr};
};

}  // namespace gns
