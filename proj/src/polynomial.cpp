#include "gns/polynomial.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "gns/point.hpp"

namespace gns {
namespace {

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(const BigInt& x, unsigned i) {
  BigInt num = 1;
  for (unsigned t = 0; t < i; ++t) num *= x - t;
  return num / factorial(i);  // exact: product of i consecutive integers
}

}  // namespace

GenusPolynomial build_polynomial(unsigned genus,
                                 const std::vector<std::uint64_t>& rank_counts) {
  if (genus == 0) throw InvalidInput("genus must be >= 1");
  if (rank_counts.size() != genus)
    throw InvalidInput("expected exactly one rank count per rank 1..genus");

  GenusPolynomial f;
  f.genus = genus;
  f.binomial_coeffs = rank_counts;
  f.monomial.assign(static_cast<std::size_t>(genus) + 1, BigRat(0));

  // falling[j] = coefficient of x^j in x(x-1)...(x-i+1), maintained while i
  // grows; C(x,i) contributes falling[j]/i! to the monomial coefficients
  std::vector<BigInt> falling{0, 1};  // i = 1: the polynomial x
  for (unsigned i = 1; i <= genus; ++i) {
    if (i >= 2) {
      falling.push_back(0);
      for (std::size_t j = falling.size() - 1; j >= 1; --j)
        falling[j] = falling[j - 1] - BigInt(i - 1) * falling[j];
      falling[0] = -BigInt(i - 1) * falling[0];
    }
    const BigInt fact = factorial(i);
    for (std::size_t j = 0; j <= i; ++j) {
      if (falling[j] == 0) continue;
      f.monomial[j] += BigRat(BigInt(rank_counts[i - 1]) * falling[j], fact);
    }
  }
  return f;
}

BigInt evaluate(const GenusPolynomial& f, std::uint64_t x) {
  BigInt via_binomials = 0;
  for (unsigned i = 1; i <= f.genus; ++i)
    via_binomials += BigInt(f.binomial_coeffs[i - 1]) * binomial(BigInt(x), i);

  BigRat via_monomials = 0;
  BigRat power = 1;
  for (std::size_t j = 0; j < f.monomial.size(); ++j) {
    via_monomials += f.monomial[j] * power;
    power *= BigInt(x);
  }
  if (BigRat(via_binomials) != via_monomials)
    throw InternalInconsistency("binomial and monomial evaluations disagree");
  return via_binomials;
}

std::string to_string(const GenusPolynomial& f) {
  std::string out;
  for (std::size_t j = f.monomial.size(); j-- > 0;) {
    const BigRat& c = f.monomial[j];
    if (c == 0) continue;
    const bool negative = c < 0;
    BigRat mag = negative ? BigRat(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (j == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += j == 1 ? "x" : "x^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

std::string decimal_string(const BigRat& q, unsigned places) {
  const bool negative = q < 0;
  BigInt num = boost::multiprecision::numerator(negative ? BigRat(-q) : q);
  const BigInt den = boost::multiprecision::denominator(negative ? BigRat(-q) : q);
  BigInt scale = 1;
  for (unsigned i = 0; i < places; ++i) scale *= 10;
  num *= scale;
  BigInt digits = num / den;
  const BigInt rem = num % den;
  const BigInt twice_rem = 2 * rem;
  const int cmp = twice_rem.compare(den);
  if (cmp > 0 || (cmp == 0 && digits % 2 != 0)) ++digits;  // round half to even

  std::string s = digits.str();
  if (s.size() <= places) s.insert(0, places + 1 - s.size(), '0');
  std::string frac = s.substr(s.size() - places);
  std::string whole = s.substr(0, s.size() - places);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (negative ? "-" : "") + whole;
  if (!frac.empty()) out += "." + frac;
  return out;
}

std::vector<RatioRow> ratio_table(unsigned max_genus,
                                  const std::vector<std::uint64_t>& counts_1d,
                                  const std::vector<std::uint64_t>& counts_2d) {
  if (counts_1d.size() <= max_genus || counts_2d.size() <= max_genus)
    throw InvalidInput("need counts for every genus up to max_genus");
  std::vector<RatioRow> rows;
  for (unsigned g = 1; g <= max_genus; ++g) {
    RatioRow row;
    row.genus = g;
    row.count_1d = counts_1d[g];
    row.count_1d_sq = checked_mul(counts_1d[g], counts_1d[g]);
    row.count_2d = counts_2d[g];
    if (row.count_2d == 0 || counts_2d[g - 1] == 0)
      throw InvalidInput("counts must be positive");
    row.ratio = BigRat(BigInt(row.count_1d_sq), BigInt(row.count_2d));
    row.growth = BigRat(BigInt(row.count_2d), BigInt(counts_2d[g - 1]));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gns
