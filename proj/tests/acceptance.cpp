// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Set GNS_ACCEPTANCE_LONG=1 to include the slow extras
// (genus 13 in the plane). Runtime budgets are enforced where a criterion
// carries one.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gns/convert.hpp"
#include "gns/enumerate.hpp"
#include "gns/errors.hpp"
#include "gns/gns.hpp"
#include "gns/order.hpp"
#include "gns/point.hpp"
#include "gns/polynomial.hpp"

using namespace gns;

namespace {

bool long_mode() {
  const char* v = std::getenv("GNS_ACCEPTANCE_LONG");
  return v != nullptr && std::strcmp(v, "1") == 0;
}

struct Criterion {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int g_failures = 0;

void run(const char* name, const std::function<void(Criterion&)>& body) {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("unexpected exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.ok) {
    std::printf("PASS: %s (%.1fs)\n", name, secs);
  } else {
    std::printf("FAIL: %s (%.1fs) -- %s\n", name, secs, c.detail.c_str());
    ++g_failures;
  }
  std::fflush(stdout);
}

std::string mismatch(const char* what, std::uint64_t expected, std::uint64_t got) {
  return std::string(what) + ": expected " + std::to_string(expected) + ", got " +
         std::to_string(got);
}

std::set<std::vector<Point>> collect_gap_sets(unsigned genus, unsigned dim,
                                              const RelaxedOrder& ord,
                                              TreeMethod method) {
  std::set<std::vector<Point>> out;
  enumerate_genus(genus, dim, ord, [&](const Gns& s) { out.insert(s.gaps()); },
                  method);
  return out;
}

Point max_gap_bound(const std::vector<Point>& gaps, unsigned dim) {
  CoordVec m(dim, 0);
  for (const Point& h : gaps)
    for (unsigned j = 0; j < dim; ++j)
      if (h[j] > m[j]) m[j] = h[j];
  return Point(std::move(m));
}

// Conversion checks shared by the exhaustive and randomized corpus of
// criterion 7: both round trips plus agreement with the worklist oracle.
void check_conversions(Criterion& c, const std::vector<Point>& gaps, unsigned dim,
                       const RelaxedOrder& ord) {
  const auto gens = gaps_to_generators(gaps, dim, ord);
  const auto back = generators_to_gaps(gens, dim);
  c.expect(back == gaps, "gaps -> generators -> gaps is not the identity (genus " +
                             std::to_string(gaps.size()) + ", dim " +
                             std::to_string(dim) + ")");
  const auto gens_again = gaps_to_generators(back, dim, ord);
  c.expect(gens_again == gens, "generators -> gaps -> generators is not the identity");
  const auto oracle = brute_force_gaps_oracle(gens, max_gap_bound(gaps, dim));
  c.expect(oracle == gaps, "sieve disagrees with the worklist closure oracle");
}

}  // namespace

int main() {
  const bool slow = long_mode();

  // Criterion 1: counts in the plane for genus 1..12, by both engines.
  run("01 plane counts, genus 1..12, both engines", [&](Criterion& c) {
    const std::vector<std::uint64_t> plane = {1,    2,     7,     23,    71,
                                              210,  638,   1894,  5570,  16220,
                                              46898, 134856, 386354};
    const auto ord = RelaxedOrder::lex(2);
    const auto start = std::chrono::steady_clock::now();
    const auto tree = count_genus_tree(12, 2, ord);
    for (unsigned g = 0; g <= 12; ++g)
      c.expect(tree.per_genus[g] == plane[g],
               mismatch(("genus-tree count at genus " + std::to_string(g)).c_str(),
                        plane[g], tree.per_genus[g]));
    for (unsigned g = 1; g <= 12; ++g) {
      const auto total = count_ordinarization(g, 2, ord).total;
      c.expect(total == plane[g],
               mismatch(("fixed-genus count at genus " + std::to_string(g)).c_str(),
                        plane[g], total));
    }
    if (slow) {
      const auto t13 = count_genus_tree(13, 2, ord).total;
      c.expect(t13 == 1102980, mismatch("genus-tree count at genus 13", 1102980, t13));
      const auto o13 = count_ordinarization(13, 2, ord).total;
      c.expect(o13 == 1102980, mismatch("fixed-genus count at genus 13", 1102980, o13));
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    c.expect(secs < (slow ? 1200.0 : 300.0), "runtime budget exceeded");
  });

  // Criterion 2: dimensions 3..5 through genus 6.
  run("02 counts in dimensions 3..5 through genus 6", [](Criterion& c) {
    const std::vector<std::vector<std::uint64_t>> block = {
        {1, 3, 15, 67, 292, 1215, 5075},
        {1, 4, 26, 146, 811, 4320, 22885},
        {1, 5, 40, 270, 1810, 11686, 74685}};
    const auto start = std::chrono::steady_clock::now();
    for (unsigned d = 3; d <= 5; ++d) {
      const auto ord = RelaxedOrder::lex(d);
      const auto rep = count_genus_tree(6, d, ord);
      for (unsigned g = 0; g <= 6; ++g)
        c.expect(rep.per_genus[g] == block[d - 3][g],
                 mismatch(("count at genus " + std::to_string(g) + ", dim " +
                           std::to_string(d))
                              .c_str(),
                          block[d - 3][g], rep.per_genus[g]));
      const auto fixed = count_ordinarization(6, d, ord).total;
      c.expect(fixed == block[d - 3][6],
               mismatch(("fixed-genus count at genus 6, dim " + std::to_string(d))
                            .c_str(),
                        block[d - 3][6], fixed));
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    c.expect(secs < 600.0, "runtime budget exceeded");
  });

  // Criterion 3: rank-split counts.
  run("03 rank-split counts", [](Criterion& c) {
    struct Spot {
      unsigned genus, dim, rank;
      std::uint64_t expected;
    };
    const Spot spots[] = {{4, 2, 2, 57},
                          {4, 3, 3, 100},
                          {5, 3, 3, 621},
                          {4, 4, 4, 41},
                          {5, 4, 4, 672}};
    for (const Spot& s : spots) {
      const auto rep = count_ordinarization(s.genus, s.dim, RelaxedOrder::lex(s.dim));
      c.expect(rep.by_rank.size() == s.dim, "by_rank has the wrong length");
      if (rep.by_rank.size() == s.dim)
        c.expect(rep.by_rank[s.rank - 1] == s.expected,
                 mismatch(("rank " + std::to_string(s.rank) + " count at genus " +
                           std::to_string(s.genus) + ", dim " + std::to_string(s.dim))
                              .c_str(),
                          s.expected, rep.by_rank[s.rank - 1]));
    }
  });

  // Criterion 4: the counting polynomials, built from self-computed rank
  // counts, have the expected exact coefficients and evaluate to the counted
  // totals in every dimension up to 8.
  run("04 counting polynomials closed under evaluation", [](Criterion& c) {
    const std::vector<std::vector<BigRat>> expected_monomials = {
        {BigRat(0), BigRat(1)},
        {BigRat(0), BigRat(1, 2), BigRat(3, 2)},
        {BigRat(0), BigRat(-1, 6), BigRat(5, 2), BigRat(5, 3)},
        {BigRat(0), BigRat(19, 12), BigRat(-65, 24), BigRat(77, 12), BigRat(41, 24)}};
    std::vector<GenusPolynomial> polys;
    for (unsigned g = 1; g <= 4; ++g) {
      std::vector<std::uint64_t> counts;
      for (unsigned i = 1; i <= g; ++i)
        counts.push_back(count_ordinarization(g, i, RelaxedOrder::lex(i)).by_rank[i - 1]);
      polys.push_back(build_polynomial(g, counts));
      c.expect(polys.back().monomial == expected_monomials[g - 1],
               "monomial coefficients of the genus-" + std::to_string(g) +
                   " polynomial differ: got " + to_string(polys.back()));
    }
    for (unsigned d = 1; d <= 8; ++d) {
      const auto rep = count_genus_tree(4, d, RelaxedOrder::lex(d));
      for (unsigned g = 1; g <= 4; ++g) {
        const BigInt value = evaluate(polys[g - 1], d);
        c.expect(value == BigInt(rep.per_genus[g]),
                 "polynomial value at genus " + std::to_string(g) + ", dim " +
                     std::to_string(d) + " differs from the counted total " +
                     std::to_string(rep.per_genus[g]));
      }
    }
  });

  // Criterion 5: counts on the line for genus 0..10.
  run("05 line counts, genus 0..10", [](Criterion& c) {
    const std::vector<std::uint64_t> line = {1,  1,  2,  4,  7,   12,
                                             23, 39, 67, 118, 204};
    const auto ord = RelaxedOrder::lex(1);
    const auto tree = count_genus_tree(10, 1, ord);
    for (unsigned g = 0; g <= 10; ++g) {
      c.expect(tree.per_genus[g] == line[g],
               mismatch(("genus-tree count at genus " + std::to_string(g)).c_str(),
                        line[g], tree.per_genus[g]));
      const auto fixed = count_ordinarization(g, 1, ord).total;
      c.expect(fixed == line[g],
               mismatch(("fixed-genus count at genus " + std::to_string(g)).c_str(),
                        line[g], fixed));
    }
  });

  // Criterion 6: the genus-3 plane walkthrough: all 23 gap sets, and the son
  // lists of the six interior nodes of the fixed-genus forest.
  run("06 genus-3 plane walkthrough: 23 gap sets and son lists", [](Criterion& c) {
    using GapSet = std::vector<Point>;
    const std::vector<GapSet> nodes = {
        {{0, 1}, {0, 2}, {0, 3}},  //  0: the ordinary root
        {{0, 1}, {0, 3}, {1, 0}},  //  1
        {{0, 1}, {0, 3}, {1, 1}},  //  2
        {{0, 1}, {0, 3}, {0, 5}},  //  3
        {{0, 1}, {0, 2}, {1, 0}},  //  4
        {{0, 1}, {0, 2}, {1, 1}},  //  5
        {{0, 1}, {0, 2}, {1, 2}},  //  6
        {{0, 1}, {0, 2}, {0, 4}},  //  7
        {{0, 1}, {0, 2}, {0, 5}},  //  8
        {{0, 1}, {1, 0}, {1, 1}},  //  9
        {{0, 1}, {1, 0}, {2, 1}},  // 10
        {{0, 1}, {1, 0}, {1, 2}},  // 11
        {{0, 1}, {1, 0}, {2, 0}},  // 12
        {{0, 1}, {1, 0}, {3, 0}},  // 13
        {{0, 1}, {1, 1}, {2, 1}},  // 14
        {{1, 0}, {1, 1}, {2, 0}},  // 15
        {{1, 0}, {1, 1}, {3, 0}},  // 16
        {{1, 0}, {1, 1}, {1, 2}},  // 17
        {{1, 0}, {2, 0}, {2, 1}},  // 18
        {{1, 0}, {2, 0}, {3, 0}},  // 19
        {{1, 0}, {2, 0}, {4, 0}},  // 20
        {{1, 0}, {2, 0}, {5, 0}},  // 21
        {{1, 0}, {3, 0}, {5, 0}},  // 22
    };
    const std::vector<std::pair<unsigned, std::vector<unsigned>>> son_lists = {
        {0, {1, 2, 3, 4, 5, 6, 7, 8}},
        {4, {9, 10, 11, 12, 13}},
        {5, {14}},
        {9, {15, 16, 17}},
        {12, {18, 19, 20, 21}},
        {13, {22}}};

    const auto ord = RelaxedOrder::lex(2);
    const auto emitted = collect_gap_sets(3, 2, ord, TreeMethod::Ordinarization);
    c.expect(emitted.size() == 23, mismatch("number of gap sets", 23, emitted.size()));
    c.expect(emitted == std::set<GapSet>(nodes.begin(), nodes.end()),
             "the emitted gap sets differ from the expected 23");

    std::set<unsigned> interior;
    for (const auto& [parent, kids] : son_lists) {
      interior.insert(parent);
      std::set<GapSet> expected;
      for (unsigned k : kids) expected.insert(nodes[k]);
      std::set<GapSet> got;
      for (const Gns& son :
           sons_ordinarization(Gns::from_gaps(2, nodes[parent]), ord))
        got.insert(son.gaps());
      c.expect(got == expected,
               "son list of node " + std::to_string(parent) + " differs");
    }
    for (unsigned i = 0; i < nodes.size(); ++i) {
      if (interior.count(i)) continue;
      c.expect(sons_ordinarization(Gns::from_gaps(2, nodes[i]), ord).empty(),
               "node " + std::to_string(i) + " should be a leaf");
    }
  });

  // Criterion 7: conversion round trips and the closure oracle, on every
  // semigroup with genus <= 4 in dimensions 1..3 plus 500 random ones with
  // genus <= 8; the whole corpus must finish inside two minutes.
  run("07 conversion round trips against the closure oracle", [](Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t exhaustive = 0;
    for (unsigned d = 1; d <= 3; ++d) {
      const auto ord = RelaxedOrder::lex(d);
      for (unsigned g = 0; g <= 4; ++g)
        for (const auto& gaps : collect_gap_sets(g, d, ord, TreeMethod::Ordinarization)) {
          check_conversions(c, gaps, d, ord);
          ++exhaustive;
        }
    }
    c.expect(exhaustive == 15 + 104 + 378,
             mismatch("exhaustive corpus size", 15 + 104 + 378, exhaustive));
    for (unsigned i = 0; i < 500; ++i) {
      const unsigned d = 1 + i % 3;
      const unsigned g = 1 + i % 8;
      const auto s = random_gns(g, d, 5000 + i);
      check_conversions(c, s.gaps(), d, RelaxedOrder::lex(d));
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    c.expect(secs < 120.0, "runtime budget of two minutes exceeded");
  });

  // Criterion 8: both engines emit the same fixed-genus sets.
  run("08 engines emit identical sets, genus <= 5, dim <= 3", [](Criterion& c) {
    for (unsigned d = 1; d <= 3; ++d) {
      const auto ord = RelaxedOrder::lex(d);
      for (unsigned g = 0; g <= 5; ++g) {
        std::vector<std::vector<Point>> a, b;
        const auto na = enumerate_genus(
            g, d, ord, [&](const Gns& s) { a.push_back(s.gaps()); },
            TreeMethod::Ordinarization);
        const auto nb = enumerate_genus(
            g, d, ord, [&](const Gns& s) { b.push_back(s.gaps()); },
            TreeMethod::GenusTree);
        c.expect(na == a.size() && nb == b.size(), "reported totals disagree with sinks");
        const std::set<std::vector<Point>> sa(a.begin(), a.end());
        const std::set<std::vector<Point>> sb(b.begin(), b.end());
        c.expect(sa.size() == a.size() && sb.size() == b.size(),
                 "an engine emitted a duplicate at genus " + std::to_string(g) +
                     ", dim " + std::to_string(d));
        c.expect(sa == sb, "engines disagree at genus " + std::to_string(g) +
                               ", dim " + std::to_string(d));
      }
    }
  });

  // Criterion 9: randomized invariants, one thousand cases per property.
  run("09 randomized invariants, 1000 cases per property", [](Criterion& c) {
    std::mt19937_64 rng(424242);

    // relaxed-order axioms on random triples
    for (unsigned i = 0; i < 1000 && c.ok; ++i) {
      const unsigned d = 1 + i % 3;
      auto draw = [&] {
        CoordVec v(d);
        for (unsigned j = 0; j < d; ++j) v[j] = rng() % 10;
        return Point(std::move(v));
      };
      const Point u = draw(), v = draw(), w = draw();
      for (const auto& ord : {RelaxedOrder::lex(d), RelaxedOrder::graded_lex(d),
                              RelaxedOrder::min_then(d)}) {
        auto leq = [&](const Point& a, const Point& b) { return !ord.less(b, a); };
        c.expect(leq(u, v) || leq(v, u), "totality failed");
        c.expect(!(ord.less(u, v) && ord.less(v, u)), "antisymmetry failed");
        const Point* t[3] = {&u, &v, &w};
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b)
            for (int e = 0; e < 3; ++e)
              if (leq(*t[a], *t[b]) && leq(*t[b], *t[e]))
                c.expect(leq(*t[a], *t[e]), "transitivity failed");
        c.expect(leq(Point::zero(d), u), "the origin is not minimal");
        if (leq(u, v)) c.expect(leq(u, v + w), "translation invariance failed");
      }
    }

    // corpus driver shared by the semigroup properties
    auto corpus = [&](std::uint64_t salt, auto&& body) {
      for (unsigned i = 0; i < 1000 && c.ok; ++i) {
        const unsigned d = 1 + i % 3;
        const unsigned g = 1 + i % 8;
        const auto s = random_gns(g, d, salt + i);
        const auto ord = i % 3 == 0   ? RelaxedOrder::lex(d)
                         : i % 3 == 1 ? RelaxedOrder::graded_lex(d)
                                      : RelaxedOrder::min_then(d);
        body(s, ord, d, g);
      }
    };

    // the largest gap can always be adjoined
    corpus(11000, [&](const Gns& s, const RelaxedOrder& ord, unsigned, unsigned) {
      const auto f = s.frobenius_element(ord);
      c.expect(!f.is_sentinel(), "missing largest gap on a nontrivial semigroup");
      const auto sg = s.special_gaps();
      c.expect(std::find(sg.begin(), sg.end(), *f.at) != sg.end(),
               "largest gap " + to_display(*f.at) + " is not a special gap");
    });

    // the smallest nonzero element is a minimal generator
    corpus(12000, [&](const Gns& s, const RelaxedOrder& ord, unsigned, unsigned) {
      const Point m = s.multiplicity(ord);
      const auto& gens = s.minimal_generators();
      c.expect(std::find(gens.begin(), gens.end(), m) != gens.end(),
               "multiplicity " + to_display(m) + " is not a minimal generator");
      for (const Point& a : gens)
        c.expect(!ord.less(a, m), "a minimal generator precedes the multiplicity");
    });

    // edge operations move the genus by exactly one and invert each other
    corpus(13000, [&](const Gns& s, const RelaxedOrder&, unsigned, unsigned g) {
      const auto& gens = s.minimal_generators();
      const Point v = gens[rng() % gens.size()];
      const Gns child = s.remove_minimal_generator(v);
      c.expect(child.genus() == g + 1, "removal did not raise the genus by one");
      c.expect(child.add_special_gap(v) == s, "adjunction did not undo the removal");
      const auto sg = s.special_gaps();
      c.expect(!sg.empty(), "a semigroup with gaps has an adjoinable gap");
      if (!sg.empty()) {
        const Point h = sg[rng() % sg.size()];
        const Gns parent = s.add_special_gap(h);
        c.expect(parent.genus() == g - 1, "adjunction did not lower the genus by one");
        c.expect(parent.remove_minimal_generator(h) == s,
                 "removal did not undo the adjunction");
      }
    });

    // the ordinarization transform reaches the ordinary semigroup in <= g steps
    for (unsigned i = 0; i < 1000 && c.ok; ++i) {
      const unsigned d = 1 + i % 3;
      const unsigned g = 1 + i % 8;
      const auto ord =
          i % 2 == 0 ? RelaxedOrder::lex(d) : RelaxedOrder::graded_lex(d);
      Gns t = random_gns(g, d, 14000 + i);
      unsigned steps = 0;
      while (!t.is_ordinary(ord) && steps <= g) {
        t = t.ordinarization(ord);
        ++steps;
      }
      c.expect(steps <= g, "ordinarization took more steps than the genus");
      c.expect(t == ordinary_semigroup(g, d, ord),
               "ordinarization did not end at the ordinary semigroup");
    }
  });

  // Criterion 10: the counts that are too large for this suite are still
  // legal inputs; they start real work and abort cleanly at a deadline.
  run("10 out-of-scale counts accepted and deadline-guarded (not run to completion)",
      [](Criterion& c) {
        struct Probe {
          const char* label;
          std::function<void(const EnumOptions&)> call;
        };
        const Probe probes[] = {
            {"plane count at genus 19",
             [](const EnumOptions& o) {
               count_ordinarization(19, 2, RelaxedOrder::lex(2), o);
             }},
            {"plane count at genus 21",
             [](const EnumOptions& o) {
               count_genus_tree(21, 2, RelaxedOrder::lex(2), o);
             }},
            {"dim-4 count at genus 13",
             [](const EnumOptions& o) {
               count_ordinarization(13, 4, RelaxedOrder::lex(4), o);
             }},
            {"dim-6 count at genus 9",
             [](const EnumOptions& o) {
               count_genus_tree(9, 6, RelaxedOrder::lex(6), o);
             }},
            {"rank-9 split at genus 9",
             [](const EnumOptions& o) {
               count_ordinarization(9, 9, RelaxedOrder::lex(9), o);
             }},
        };
        for (const Probe& p : probes) {
          EnumOptions opts;
          opts.deadline =
              std::chrono::steady_clock::now() + std::chrono::milliseconds(50);
          bool aborted = false;
          try {
            p.call(opts);
          } catch (const LimitExceeded&) {
            aborted = true;
          }
          c.expect(aborted, std::string(p.label) +
                                " should have hit the deadline, not finished or thrown "
                                "something else");
        }
      });
  std::printf(
      "      declared out of scale here (counters are 64-bit safe): plane genus "
      "19..21, dim 4 genus 13, dim >= 6 genus 9, rank-9 split\n");

  std::printf("acceptance: %d/10 criteria passed\n", 10 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
