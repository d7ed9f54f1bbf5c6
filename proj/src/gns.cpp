#include "gns/gns.hpp"

#include <algorithm>

#include "gns/convert.hpp"

namespace gns {
namespace {

bool sorted_contains(const std::vector<Point>& sorted, const Point& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

}  // namespace

std::string FrobeniusValue::display(unsigned dim) const {
  if (at) return to_display(*at);
  std::string s = "(";
  for (unsigned i = 0; i < dim; ++i) {
    if (i) s += ',';
    s += "-1";
  }
  return s + ")";
}

Gns::Gns(unsigned dim, std::vector<Point> sorted_gaps)
    : dim_(dim), gaps_(std::move(sorted_gaps)) {
  if (dim_ == 0) throw InvalidInput("dimension must be >= 1");
}

Gns::Gns(const Gns& o) : dim_(o.dim_), gaps_(o.gaps_) {
  if (const auto* g = o.min_gens_.load(std::memory_order_acquire))
    min_gens_.store(new std::vector<Point>(*g), std::memory_order_release);
}

Gns::Gns(Gns&& o) noexcept
    : dim_(o.dim_),
      gaps_(std::move(o.gaps_)),
      min_gens_(o.min_gens_.exchange(nullptr, std::memory_order_acq_rel)) {}

Gns& Gns::operator=(Gns o) noexcept {
  std::swap(dim_, o.dim_);
  std::swap(gaps_, o.gaps_);
  const auto* mine = min_gens_.load(std::memory_order_relaxed);
  min_gens_.store(o.min_gens_.exchange(mine, std::memory_order_acq_rel),
                  std::memory_order_release);
  return *this;
}

Gns::~Gns() { delete min_gens_.load(std::memory_order_acquire); }

Gns Gns::from_gaps(unsigned dim, std::vector<Point> gaps) {
  for (const Point& p : gaps) {
    if (p.dim() != dim) throw DimensionMismatch("gap dimension does not match");
    if (p.is_zero()) throw NotAMonoid(Point::zero(dim), Point::zero(dim));
  }
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());

  // Closure criterion: for each gap h and each non-gap x strictly inside the
  // box below h, the difference h - x must again be a gap.
  for (const Point& h : gaps) {
    for (const Point& x : box(h)) {
      if (x.is_zero() || sorted_contains(gaps, x)) continue;
      Point rest = *h.minus(x);
      if (rest.is_zero()) continue;  // x == h, already skipped via gap test
      if (!sorted_contains(gaps, rest)) throw NotAMonoid(h, x);
    }
  }
  return Gns(dim, std::move(gaps));
}

bool Gns::contains(const Point& x) const {
  if (x.dim() != dim_) throw DimensionMismatch("point dimension does not match");
  return !sorted_contains(gaps_, x);
}

const std::vector<Point>& Gns::minimal_generators() const {
  if (const auto* g = min_gens_.load(std::memory_order_acquire)) return *g;
  auto* fresh = new std::vector<Point>(
      gaps_to_generators(gaps_, dim_, RelaxedOrder::lex(dim_)));
  const std::vector<Point>* expected = nullptr;
  if (!min_gens_.compare_exchange_strong(expected, fresh, std::memory_order_acq_rel,
                                         std::memory_order_acquire)) {
    delete fresh;  // another thread computed the same value first
    return *expected;
  }
  return *fresh;
}

void Gns::prime_generator_cache(std::vector<Point> gens) const {
  auto* fresh = new std::vector<Point>(std::move(gens));
  const std::vector<Point>* expected = nullptr;
  if (!min_gens_.compare_exchange_strong(expected, fresh, std::memory_order_acq_rel,
                                         std::memory_order_acquire))
    delete fresh;
}

Point Gns::multiplicity(const RelaxedOrder& ord) const {
  const auto& gens = minimal_generators();
  if (gens.empty()) throw InternalInconsistency("no minimal generators");
  const Point* best = &gens.front();
  for (const Point& g : gens)
    if (ord.less(g, *best)) best = &g;
  return *best;
}

FrobeniusValue Gns::frobenius_element(const RelaxedOrder& ord) const {
  if (ord.dim() != dim_) throw DimensionMismatch("order dimension does not match");
  if (gaps_.empty()) return {};
  const Point* best = &gaps_.front();
  for (const Point& h : gaps_)
    if (ord.less(*best, h)) best = &h;
  return {*best};
}

std::vector<Point> Gns::pseudo_frobenius() const {
  // h + s in S for all nonzero s: checking the generators suffices, since
  // every nonzero s is a generator plus a member and S is closed under +.
  const auto& gens = minimal_generators();
  std::vector<Point> out;
  for (const Point& h : gaps_) {
    bool pf = true;
    for (const Point& g : gens) {
      if (sorted_contains(gaps_, h + g)) {
        pf = false;
        break;
      }
    }
    if (pf) out.push_back(h);
  }
  return out;
}

std::vector<Point> Gns::special_gaps() const {
  std::vector<Point> out;
  for (const Point& h : pseudo_frobenius())
    if (!sorted_contains(gaps_, h + h)) out.push_back(h);
  return out;
}

std::vector<Point> Gns::unbounded_generators(const RelaxedOrder& ord) const {
  FrobeniusValue f = frobenius_element(ord);
  std::vector<Point> out;
  for (const Point& g : minimal_generators())
    if (f.is_sentinel() || ord.less(*f.at, g)) out.push_back(g);
  return out;
}

Gns Gns::remove_minimal_generator(const Point& v) const {
  if (v.dim() != dim_) throw DimensionMismatch("point dimension does not match");
  const auto& gens = minimal_generators();
  if (!sorted_contains(gens, v)) throw NotAMinimalGenerator(v);
  std::vector<Point> gaps = gaps_;
  gaps.insert(std::upper_bound(gaps.begin(), gaps.end(), v), v);
  Gns out(dim_, std::move(gaps));
  out.prime_generator_cache(generators_after_removal(gens, v, out.gaps_));
  return out;
}

Gns Gns::add_special_gap(const Point& h) const {
  if (h.dim() != dim_) throw DimensionMismatch("point dimension does not match");
  std::vector<Point> sg = special_gaps();
  std::sort(sg.begin(), sg.end());
  if (!sorted_contains(sg, h)) throw NotASpecialGap(h);
  std::vector<Point> gaps = gaps_;
  gaps.erase(std::find(gaps.begin(), gaps.end(), h));
  Gns out(dim_, std::move(gaps));
  out.prime_generator_cache(generators_after_adjunction(minimal_generators(), h, out.gaps_));
  return out;
}

bool Gns::is_ordinary(const RelaxedOrder& ord) const {
  if (gaps_.empty()) return true;
  return ord.less(*frobenius_element(ord).at, multiplicity(ord));
}

Gns Gns::ordinarization(const RelaxedOrder& ord) const {
  if (is_ordinary(ord)) return *this;
  Point f = *frobenius_element(ord).at;
  Point m = multiplicity(ord);
  return add_special_gap(f).remove_minimal_generator(m);
}

}  // namespace gns
