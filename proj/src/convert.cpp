#include "gns/convert.hpp"

#include <algorithm>
#include <numeric>

namespace gns {
namespace {

// Row-major addressing of the box below v, last coordinate fastest; ascending
// index order is lexicographic point order.
struct BoxIndex {
  CoordVec extent;
  std::vector<std::uint64_t> stride;
  std::uint64_t volume = 1;

  explicit BoxIndex(const Point& v) : extent(v.dim()), stride(v.dim()) {
    for (unsigned i = 0; i < v.dim(); ++i) extent[i] = checked_add(v[i], 1);
    for (unsigned i = v.dim(); i-- > 0;) {
      stride[i] = volume;
      volume = checked_mul(volume, extent[i]);
    }
  }

  std::uint64_t index(const Point& p) const {
    std::uint64_t idx = 0;
    for (unsigned i = 0; i < p.dim(); ++i) idx += p[i] * stride[i];
    return idx;
  }

  Point decode(std::uint64_t idx) const {
    CoordVec c(extent.size());
    for (unsigned i = 0; i < extent.size(); ++i) {
      c[i] = idx / stride[i];
      idx %= stride[i];
    }
    return Point(std::move(c));
  }
};

bool sorted_contains(const std::vector<Point>& sorted, const Point& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

void insert_sorted(std::vector<Point>& sorted, const Point& p) {
  sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), p), p);
}

// True when t lies in the monoid with gap set `gaps` and t != 0.
bool nonzero_member(const std::optional<Point>& t, const std::vector<Point>& gaps) {
  return t && !t->is_zero() && !sorted_contains(gaps, *t);
}

std::vector<Point> clean_points(const std::vector<Point>& pts, unsigned dim,
                                bool drop_zero) {
  if (dim == 0) throw InvalidInput("dimension must be >= 1");
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const Point& p : pts) {
    if (p.dim() != dim) throw DimensionMismatch("point dimension does not match");
    if (drop_zero && p.is_zero()) continue;
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Point> generators_after_removal(const std::vector<Point>& gens,
                                            const Point& v,
                                            const std::vector<Point>& gaps_after) {
  std::vector<Point> kept;
  kept.reserve(gens.size() + 2);
  for (const Point& g : gens)
    if (!(g == v)) kept.push_back(g);

  // Removing the generator v leaves every other old generator minimal; the
  // only candidates for new minimal generators are g + v, 2v and 3v.
  std::vector<Point> candidates;
  candidates.reserve(kept.size() + 2);
  for (const Point& g : kept) candidates.push_back(g + v);
  candidates.push_back(v + v);
  candidates.push_back(v + v + v);

  std::vector<Point> out = kept;
  for (const Point& u : candidates) {
    bool minimal = true;
    for (const Point& w : kept) {
      if (nonzero_member(u.minus(w), gaps_after)) {
        minimal = false;
        break;
      }
    }
    if (minimal)
      for (const Point& w : candidates) {
        if (w == u) continue;
        if (nonzero_member(u.minus(w), gaps_after)) {
          minimal = false;
          break;
        }
      }
    if (minimal) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> generators_after_adjunction(const std::vector<Point>& gens,
                                               const Point& h,
                                               const std::vector<Point>& gaps_after) {
  // Adjoining the gap h: h becomes a generator, and an old generator u stays
  // minimal unless u - h now lies in the enlarged monoid.
  std::vector<Point> out;
  out.reserve(gens.size() + 1);
  out.push_back(h);
  for (const Point& u : gens)
    if (!nonzero_member(u.minus(h), gaps_after)) out.push_back(u);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> gaps_to_generators(const std::vector<Point>& gaps, unsigned dim,
                                      const RelaxedOrder& ord) {
  if (ord.dim() != dim) throw DimensionMismatch("order dimension does not match");
  std::vector<Point> walk = clean_points(gaps, dim, /*drop_zero=*/false);
  std::sort(walk.begin(), walk.end(),
            [&ord](const Point& a, const Point& b) { return ord.less(a, b); });

  std::vector<Point> gens;
  for (unsigned j = 1; j <= dim; ++j) gens.push_back(Point::unit(dim, j));
  std::sort(gens.begin(), gens.end());

  // Each prefix of the walk is the gap set of a submonoid; the next gap must
  // currently be a minimal generator, otherwise no submonoid has this gap set.
  std::vector<Point> partial_gaps;
  for (const Point& h : walk) {
    if (!sorted_contains(gens, h)) throw NotAGns(h);
    insert_sorted(partial_gaps, h);
    gens = generators_after_removal(gens, h, partial_gaps);
  }
  return gens;
}

BoundVector bound_vector(const std::vector<Point>& gens, unsigned dim) {
  if (dim < 2) throw InvalidInput("bound vector requires dimension >= 2");
  std::vector<Point> a = clean_points(gens, dim, /*drop_zero=*/true);
  if (a.empty()) throw InvalidInput("generating set must be nonempty");

  BoundVector bv;
  bv.axis_frobenius.resize(dim);
  bv.mixed_exponents.assign(dim, std::vector<std::uint64_t>(dim, 0));

  for (unsigned j = 0; j < dim; ++j) {
    std::vector<std::uint64_t> axis;
    for (const Point& p : a) {
      bool on_axis = p[j] > 0;
      for (unsigned i = 0; on_axis && i < dim; ++i)
        if (i != j && p[i] != 0) on_axis = false;
      if (on_axis) axis.push_back(p[j]);
    }
    std::uint64_t g = 0;
    for (std::uint64_t v : axis) g = std::gcd(g, v);
    if (g != 1) throw AxisNotNumerical(j + 1);
    bv.axis_frobenius[j] = NumericalSemigroup::from_generators(axis).frobenius();
  }

  for (unsigned i = 0; i < dim; ++i) {
    for (unsigned k = 0; k < dim; ++k) {
      if (i == k) continue;
      bool found = false;
      std::uint64_t best = 0;
      for (const Point& p : a) {
        if (p[i] != 1) continue;
        bool shape = true;
        for (unsigned t = 0; shape && t < dim; ++t)
          if (t != i && t != k && p[t] != 0) shape = false;
        if (!shape) continue;
        if (!found || p[k] < best) {
          found = true;
          best = p[k];
        }
      }
      if (!found) throw MissingMixedGenerator(i + 1, k + 1);
      bv.mixed_exponents[i][k] = best;
    }
  }

  CoordVec v(dim);
  for (unsigned j = 0; j < dim; ++j) {
    std::uint64_t sum = bv.axis_frobenius[j] > 0
                            ? static_cast<std::uint64_t>(bv.axis_frobenius[j])
                            : 0;
    for (unsigned i = 0; i < dim; ++i) {
      if (i == j) continue;
      std::uint64_t fi = bv.axis_frobenius[i] > 0
                             ? static_cast<std::uint64_t>(bv.axis_frobenius[i])
                             : 0;
      sum = checked_add(sum, checked_mul(fi, bv.mixed_exponents[i][j]));
    }
    v[j] = sum;
  }
  bv.v = Point(std::move(v));
  return bv;
}

std::vector<Point> generators_to_gaps(const std::vector<Point>& gens, unsigned dim) {
  std::vector<Point> a = clean_points(gens, dim, /*drop_zero=*/true);
  if (a.empty()) throw InvalidInput("generating set must be nonempty");

  if (dim == 1) {
    std::vector<std::uint64_t> axis;
    for (const Point& p : a) axis.push_back(p[0]);
    std::uint64_t g = 0;
    for (std::uint64_t v : axis) g = std::gcd(g, v);
    if (g != 1) throw AxisNotNumerical(1);
    const NumericalSemigroup line = NumericalSemigroup::from_generators(axis);
    std::vector<Point> gaps;
    for (std::uint64_t n : line.gaps()) gaps.push_back(Point{n});
    return gaps;
  }

  BoundVector bv = bound_vector(a, dim);
  const Point& v = bv.v;
  BoxIndex bi(v);

  // Axis membership tables let pure Cartesian products of axis semigroup
  // elements be marked without consulting the recurrence.
  std::vector<std::vector<char>> axis_member(dim);
  for (unsigned j = 0; j < dim; ++j) {
    std::vector<std::uint64_t> axis;
    for (const Point& p : a) {
      bool on_axis = p[j] > 0;
      for (unsigned i = 0; on_axis && i < dim; ++i)
        if (i != j && p[i] != 0) on_axis = false;
      if (on_axis) axis.push_back(p[j]);
    }
    NumericalSemigroup sj = NumericalSemigroup::from_generators(axis);
    axis_member[j].resize(v[j] + 1);
    for (std::uint64_t n = 0; n <= v[j]; ++n) axis_member[j][n] = sj.contains(n);
  }

  std::vector<char> reach(bi.volume, 0);
  std::vector<Point> gaps;
  CoordVec cur(dim, 0);
  std::uint64_t idx = 0;
  for (;;) {
    bool in = true;
    for (unsigned j = 0; j < dim; ++j)
      if (!axis_member[j][cur[j]]) {
        in = false;
        break;
      }
    if (!in) {
      // p is a member iff p - a is reachable for some generator a <= p;
      // ascending lexicographic scan guarantees p - a was decided already.
      for (const Point& g : a) {
        bool fits = true;
        std::uint64_t off = 0;
        for (unsigned j = 0; j < dim; ++j) {
          if (g[j] > cur[j]) {
            fits = false;
            break;
          }
          off += g[j] * bi.stride[j];
        }
        if (fits && reach[idx - off]) {
          in = true;
          break;
        }
      }
    }
    if (in)
      reach[idx] = 1;
    else
      gaps.emplace_back(cur);

    // row-major with the last coordinate fastest: lexicographic scan order
    // visits indices consecutively
    unsigned i = dim;
    bool done = true;
    while (i > 0) {
      --i;
      if (cur[i] < v[i]) {
        ++cur[i];
        std::fill(cur.begin() + i + 1, cur.end(), 0);
        done = false;
        break;
      }
    }
    if (done) break;
    ++idx;
  }
  return gaps;
}

bool membership_in_generated(const std::vector<Point>& gens, const Point& x) {
  std::vector<Point> a = clean_points(gens, x.dim(), /*drop_zero=*/true);
  if (x.is_zero()) return true;
  BoxIndex bi(x);
  std::vector<char> reach(bi.volume, 0);
  reach[0] = 1;
  std::uint64_t idx = 0;
  CoordVec cur(x.dim(), 0);
  for (;;) {
    unsigned i = x.dim();
    bool done = true;
    while (i > 0) {
      --i;
      if (cur[i] < x[i]) {
        ++cur[i];
        std::fill(cur.begin() + i + 1, cur.end(), 0);
        done = false;
        break;
      }
    }
    if (done) break;
    ++idx;
    for (const Point& g : a) {
      bool fits = true;
      std::uint64_t off = 0;
      for (unsigned j = 0; j < x.dim(); ++j) {
        if (g[j] > cur[j]) {
          fits = false;
          break;
        }
        off += g[j] * bi.stride[j];
      }
      if (fits && off != 0 && reach[idx - off]) {
        reach[idx] = 1;
        break;
      }
    }
  }
  return reach[bi.volume - 1] != 0;
}

std::vector<Point> brute_force_gaps_oracle(const std::vector<Point>& gens,
                                           const Point& bound) {
  std::vector<Point> a = clean_points(gens, bound.dim(), /*drop_zero=*/true);
  BoxIndex bi(bound);
  std::vector<char> reach(bi.volume, 0);
  std::vector<Point> work{Point::zero(bound.dim())};
  reach[0] = 1;
  while (!work.empty()) {
    Point p = work.back();
    work.pop_back();
    for (const Point& g : a) {
      Point s = p + g;
      if (!componentwise_leq(s, bound)) continue;
      std::uint64_t i = bi.index(s);
      if (!reach[i]) {
        reach[i] = 1;
        work.push_back(std::move(s));
      }
    }
  }
  std::vector<Point> gaps;
  for (std::uint64_t i = 0; i < bi.volume; ++i)
    if (!reach[i]) gaps.push_back(bi.decode(i));
  return gaps;
}

}  // namespace gns
