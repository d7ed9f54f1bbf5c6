#pragma once

#include <cstdint>
#include <vector>

#include "gns/numerical.hpp"
#include "gns/order.hpp"
#include "gns/point.hpp"

namespace gns {

/// The walk reached a point that cannot be a gap of any submonoid extending
/// the previous steps, so the input gap set does not describe one.
struct NotAGns : Error {
  Point witness;
  explicit NotAGns(Point h)
      : Error("gap set does not describe a monoid complement: offending gap " +
              to_display(h)),
        witness(std::move(h)) {}
};

/// Axis j (1-based) of the generating set does not span a numerical semigroup.
struct AxisNotNumerical : Error {
  unsigned axis;
  explicit AxisNotNumerical(unsigned j)
      : Error("axis " + std::to_string(j) +
              " generators do not form a numerical semigroup (gcd != 1): "
              "the complement is infinite"),
        axis(j) {}
};

/// No generator of shape e_i + n e_k exists, so the complement is infinite.
struct MissingMixedGenerator : Error {
  unsigned i, k;
  MissingMixedGenerator(unsigned i_, unsigned k_)
      : Error("no generator e_" + std::to_string(i_) + " + n e_" + std::to_string(k_) +
              " present: the complement is infinite"),
        i(i_),
        k(k_) {}
};

/// Componentwise bound outside which a finitely-complemented submonoid
/// generated by A has no gaps, together with the data it is assembled from:
/// v_j = sum_{i != j} F_i n_i[j] + F_j, where F_i = max(frobenius(axis i), 0)
/// and n_i[k] is the smallest n with e_i + n e_k in A.
struct BoundVector {
  Point v;
  std::vector<std::int64_t> axis_frobenius;               // [i] = F(S_i), -1 allowed
  std::vector<std::vector<std::uint64_t>> mixed_exponents;  // [i][k] = n_i^(k), diag 0
};

/// Validates the two finiteness conditions and assembles the bound vector.
/// Throws AxisNotNumerical / MissingMixedGenerator. Requires dim >= 2.
BoundVector bound_vector(const std::vector<Point>& gens, unsigned dim);

/// Minimal generating set of the submonoid whose gap set is `gaps`.
/// Walks the gaps in ascending `ord` order, maintaining the generators of the
/// partial semigroup; a gap that is not currently a minimal generator proves
/// the input invalid (NotAGns). Output sorted lexicographically.
std::vector<Point> gaps_to_generators(const std::vector<Point>& gaps, unsigned dim,
                                      const RelaxedOrder& ord);

/// Minimal generators after removing the minimal generator `v` from the
/// monoid whose generators are `gens`; `gaps_after` is the gap set with `v`
/// already inserted (lexicographically sorted). Output sorted the same way.
std::vector<Point> generators_after_removal(const std::vector<Point>& gens,
                                            const Point& v,
                                            const std::vector<Point>& gaps_after);

/// Minimal generators after adjoining the special gap `h`; `gaps_after` is
/// the gap set with `h` already erased. Output sorted lexicographically.
std::vector<Point> generators_after_adjunction(const std::vector<Point>& gens,
                                               const Point& h,
                                               const std::vector<Point>& gaps_after);

/// Gap set of the submonoid generated by `gens` (sorted lexicographically).
/// Throws AxisNotNumerical / MissingMixedGenerator when the complement is
/// infinite. For dim 1 this delegates to the numerical semigroup sieve.
std::vector<Point> generators_to_gaps(const std::vector<Point>& gens, unsigned dim);

/// Membership of x in the submonoid generated by `gens`, by dynamic
/// programming over the box below x.
bool membership_in_generated(const std::vector<Point>& gens, const Point& x);

/// Reference implementation for tests: saturate {0} under addition of
/// generators inside the box below `bound` by a worklist closure, and return
/// the unreached points. Independent of the sieve used by generators_to_gaps.
std::vector<Point> brute_force_gaps_oracle(const std::vector<Point>& gens,
                                           const Point& bound);

}  // namespace gns
