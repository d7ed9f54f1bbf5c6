#include "gns/numerical.hpp"

#include <algorithm>
#include <numeric>

namespace gns {

NumericalSemigroup NumericalSemigroup::from_generators(
    const std::vector<std::uint64_t>& gens) {
  if (gens.empty()) throw InvalidInput("generating set must be nonempty");
  std::vector<std::uint64_t> a(gens);
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.front() == 0) throw InvalidInput("generators must be positive");

  std::uint64_t g = 0;
  for (std::uint64_t v : a) g = std::gcd(g, v);
  if (g != 1) throw GcdNotOne("gcd of generators is " + std::to_string(g) + ", not 1");

  const std::uint64_t m = a.front();
  // member[n] via the generator recurrence; stop after m consecutive members,
  // since adding multiples of m then reaches every larger integer.
  std::vector<char> member{1};
  std::uint64_t run = 0;
  for (std::uint64_t n = 1; run < m; ++n) {
    bool in = false;
    for (std::uint64_t v : a) {
      if (v > n) break;
      if (member[n - v]) {
        in = true;
        break;
      }
    }
    member.push_back(in ? 1 : 0);
    run = in ? run + 1 : 0;
  }

  NumericalSemigroup s;
  for (std::uint64_t n = 1; n < member.size(); ++n)
    if (!member[n]) s.gaps_.push_back(n);
  s.frobenius_ = s.gaps_.empty() ? -1 : static_cast<std::int64_t>(s.gaps_.back());

  // Minimal generators lie in [m, F + m]: anything larger splits off an m.
  for (std::uint64_t n = m; n < member.size(); ++n) {
    if (!member[n]) continue;
    bool decomposable = false;
    for (std::uint64_t b = m; b + m <= n; ++b) {
      if (member[b] && member[n - b]) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) s.min_gens_.push_back(n);
  }
  return s;
}

bool NumericalSemigroup::contains(std::uint64_t n) const {
  return !std::binary_search(gaps_.begin(), gaps_.end(), n);
}

}  // namespace gns
