#pragma once

#include <cstdint>
#include <vector>

#include "gns/errors.hpp"

namespace gns {

/// gcd of the generating set is not 1, so the complement would be infinite.
struct GcdNotOne : Error {
  using Error::Error;
};

/// Submonoid of N with finite complement, kept as minimal generators,
/// Frobenius number and the full gap set.
class NumericalSemigroup {
 public:
  /// Build from any finite set of positive integers with gcd 1.
  /// The membership sieve stops once min(A) consecutive members have been
  /// seen: from there on every integer is a member.
  static NumericalSemigroup from_generators(const std::vector<std::uint64_t>& gens);

  const std::vector<std::uint64_t>& minimal_generators() const { return min_gens_; }
  /// Largest gap, or -1 when the semigroup is all of N.
  std::int64_t frobenius() const { return frobenius_; }
  const std::vector<std::uint64_t>& gaps() const { return gaps_; }
  std::uint64_t genus() const { return gaps_.size(); }
  std::uint64_t multiplicity() const { return min_gens_.front(); }
  bool contains(std::uint64_t n) const;

 private:
  NumericalSemigroup() = default;

  std::vector<std::uint64_t> min_gens_;
  std::vector<std::uint64_t> gaps_;
  std::int64_t frobenius_ = -1;
};

}  // namespace gns
