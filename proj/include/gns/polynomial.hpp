#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "gns/errors.hpp"

namespace gns {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Counting polynomial for a fixed genus g: for every dimension d,
/// F_g(d) is the number of semigroups of genus g in N^d. The natural form is
/// the binomial basis F_g(x) = sum_i n_i * C(x, i) with n_i the number of
/// genus-g gap sets of rank i in N^i; the expanded monomial form is kept
/// alongside with exact rational coefficients.
struct GenusPolynomial {
  unsigned genus = 0;
  std::vector<std::uint64_t> binomial_coeffs;  // [i-1] = coefficient of C(x, i)
  std::vector<BigRat> monomial;                // [j] = coefficient of x^j, j = 0..genus
};

/// Expand the binomial-basis coefficients (rank counts for i = 1..genus)
/// into the monomial form. Requires genus >= 1 and exactly genus counts.
GenusPolynomial build_polynomial(unsigned genus,
                                 const std::vector<std::uint64_t>& rank_counts);

/// Exact value F_g(x). Evaluated through both the binomial and the monomial
/// form; a mismatch raises InternalInconsistency.
BigInt evaluate(const GenusPolynomial& f, std::uint64_t x);

/// "3/2*x^2 + 1/2*x" rendering, highest power first, zero terms skipped.
std::string to_string(const GenusPolynomial& f);

/// Exact decimal rendering with `places` digits after the point, rounding
/// half to even, trailing zeros trimmed ("1/2" -> "0.5").
std::string decimal_string(const BigRat& q, unsigned places = 10);

struct RatioRow {
  unsigned genus = 0;
  std::uint64_t count_1d = 0;     // semigroups of this genus in N
  std::uint64_t count_1d_sq = 0;  // its square
  std::uint64_t count_2d = 0;     // semigroups of this genus in N^2
  BigRat ratio;                   // count_1d^2 / count_2d
  BigRat growth;                  // count_2d / previous genus count_2d
};

/// Rows for genus 1..max_genus. counts_1d / counts_2d are indexed by genus
/// starting at 0 and must cover 0..max_genus.
std::vector<RatioRow> ratio_table(unsigned max_genus,
                                  const std::vector<std::uint64_t>& counts_1d,
                                  const std::vector<std::uint64_t>& counts_2d);

}  // namespace gns
