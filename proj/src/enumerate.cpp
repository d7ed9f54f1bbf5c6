#include "gns/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

#include "gns/convert.hpp"

namespace gns {
namespace {

std::uint64_t checked_count_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("count exceeds 64 bits");
  return r;
}

unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  if (const char* env = std::getenv("GNS_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 4096) return static_cast<unsigned>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

struct Ticker {
  const std::optional<std::chrono::steady_clock::time_point>& deadline;
  std::uint64_t n = 0;

  void tick() {
    if ((++n & 1023) == 0 && deadline && std::chrono::steady_clock::now() > *deadline)
      throw LimitExceeded("deadline exceeded");
  }
};

/// Run fn(i) for every i in [0, end), distributing indices over `threads`
/// workers. The first exception aborts the remaining work and is rethrown.
template <typename Fn>
void run_pool(unsigned threads, std::size_t begin, std::size_t end, Fn&& fn) {
  if (begin >= end) return;
  std::atomic<std::size_t> next{begin};
  std::atomic<bool> failed{false};
  std::mutex mu;
  std::exception_ptr first;
  auto body = [&] {
    try {
      while (!failed.load(std::memory_order_relaxed)) {
        std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= end) break;
        fn(i);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!first) first = std::current_exception();
      failed.store(true, std::memory_order_relaxed);
    }
  };
  unsigned n = static_cast<unsigned>(
      std::min<std::size_t>(threads, end - begin));
  if (n <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  if (first) std::rethrow_exception(first);
}

// Gap set plus minimal generators, both lexicographically sorted.
struct Node {
  std::vector<Point> gaps;
  std::vector<Point> atoms;
};

Node root_node(unsigned dim) {
  Node n;
  for (unsigned j = 1; j <= dim; ++j) n.atoms.push_back(Point::unit(dim, j));
  std::sort(n.atoms.begin(), n.atoms.end());
  return n;
}

std::vector<Point> insert_sorted_copy(const std::vector<Point>& sorted, const Point& p) {
  std::vector<Point> out;
  out.reserve(sorted.size() + 1);
  auto it = std::upper_bound(sorted.begin(), sorted.end(), p);
  out.insert(out.end(), sorted.begin(), it);
  out.push_back(p);
  out.insert(out.end(), it, sorted.end());
  return out;
}

bool sorted_contains(const std::vector<Point>& sorted, const Point& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

Gns to_gns(unsigned dim, const Node& node) {
  Gns s = Gns::trusted(dim, node.gaps);
  s.prime_generator_cache(node.atoms);
  return s;
}

// ---- genus tree -----------------------------------------------------------

// Generators following `frob` (all of them when frob is null). Iteration is in
// ascending lexicographic generator order, which is also ascending gap-set
// order of the resulting children.
template <typename Fn>
void for_each_unbounded(const Node& node, const Point* frob, const RelaxedOrder& ord,
                        Fn&& fn) {
  for (const Point& a : node.atoms)
    if (!frob || ord.less(*frob, a)) fn(a);
}

Node genus_child(const Node& node, const Point& v) {
  Node child;
  child.gaps = insert_sorted_copy(node.gaps, v);
  child.atoms = generators_after_removal(node.atoms, v, child.gaps);
  return child;
}

// Adds the subtree's level sizes to per_genus[depth+1 .. target]. The deepest
// level is counted through its parents' fanout without being materialized.
void genus_count_dfs(const Node& node, const Point* frob, unsigned depth,
                     unsigned target, const RelaxedOrder& ord,
                     std::vector<std::uint64_t>& per_genus, Ticker& ticker) {
  ticker.tick();
  std::uint64_t fanout = 0;
  for_each_unbounded(node, frob, ord, [&](const Point& v) {
    ++fanout;
    if (depth + 1 < target) {
      Node child = genus_child(node, v);
      genus_count_dfs(child, &v, depth + 1, target, ord, per_genus, ticker);
    }
  });
  per_genus[depth + 1] = checked_count_add(per_genus[depth + 1], fanout);
}

struct GenusItem {
  Node node;
  std::optional<Point> frob;
};

// Serial descent to `stop`, stashing the nodes there; fanout below `stop` is
// still counted here so per_genus[0..stop] is complete afterwards.
void genus_collect(Node node, const Point* frob, unsigned depth, unsigned stop,
                   const RelaxedOrder& ord, std::vector<std::uint64_t>& per_genus,
                   std::vector<GenusItem>& out, Ticker& ticker) {
  if (depth == stop) {
    out.push_back({std::move(node),
                   frob ? std::optional<Point>(*frob) : std::nullopt});
    return;
  }
  ticker.tick();
  std::uint64_t fanout = 0;
  for_each_unbounded(node, frob, ord, [&](const Point& v) {
    ++fanout;
    genus_collect(genus_child(node, v), &v, depth + 1, stop, ord, per_genus, out,
                  ticker);
  });
  per_genus[depth + 1] = checked_count_add(per_genus[depth + 1], fanout);
}

void genus_enum_dfs(const Node& node, const Point* frob, unsigned depth,
                    unsigned target, unsigned dim, const RelaxedOrder& ord,
                    const std::function<void(const Gns&)>& sink, std::uint64_t& count,
                    Ticker& ticker) {
  ticker.tick();
  if (depth == target) {
    sink(to_gns(dim, node));
    count = checked_count_add(count, 1);
    return;
  }
  for_each_unbounded(node, frob, ord, [&](const Point& v) {
    Node child = genus_child(node, v);
    genus_enum_dfs(child, &v, depth + 1, target, dim, ord, sink, count, ticker);
  });
}

// ---- ordinarization forest -------------------------------------------------

// Sons of `node` in the fixed-genus forest, sorted by gap set: adjoin a
// special gap h preceding the multiplicity, then remove an unbounded
// generator x != h of the enlarged semigroup.
std::vector<Node> ordinarization_sons(const Node& node, const RelaxedOrder& ord) {
  std::vector<Node> sons;
  if (node.gaps.empty()) return sons;

  const Point* m = &node.atoms.front();
  for (const Point& a : node.atoms)
    if (ord.less(a, *m)) m = &a;

  for (const Point& h : node.gaps) {
    if (!ord.less(h, *m)) continue;
    bool special = !sorted_contains(node.gaps, h + h);
    for (const Point& a : node.atoms) {
      if (!special) break;
      if (sorted_contains(node.gaps, h + a)) special = false;
    }
    if (!special) continue;

    Node t;
    t.gaps = node.gaps;
    t.gaps.erase(std::lower_bound(t.gaps.begin(), t.gaps.end(), h));
    t.atoms = generators_after_adjunction(node.atoms, h, t.gaps);

    const Point* ft = nullptr;  // largest gap of t, null when t has none
    for (const Point& g : t.gaps)
      if (!ft || ord.less(*ft, g)) ft = &g;

    for (const Point& x : t.atoms) {
      if (x == h) continue;
      if (ft && !ord.less(*ft, x)) continue;
      Node son;
      son.gaps = insert_sorted_copy(t.gaps, x);
      son.atoms = generators_after_removal(t.atoms, x, son.gaps);
      sons.push_back(std::move(son));
    }
  }
  std::sort(sons.begin(), sons.end(),
            [](const Node& a, const Node& b) { return a.gaps < b.gaps; });
  return sons;
}

void ordinarization_count_dfs(const Node& node, unsigned dim, const RelaxedOrder& ord,
                              std::uint64_t& total, std::vector<std::uint64_t>& by_rank,
                              Ticker& ticker) {
  ticker.tick();
  total = checked_count_add(total, 1);
  if (!node.gaps.empty()) {
    unsigned r = rank_of_points(node.gaps, dim);
    by_rank[r - 1] = checked_count_add(by_rank[r - 1], 1);
  }
  for (const Node& son : ordinarization_sons(node, ord))
    ordinarization_count_dfs(son, dim, ord, total, by_rank, ticker);
}

void ordinarization_collect(Node node, unsigned depth, unsigned stop, unsigned dim,
                            const RelaxedOrder& ord, std::uint64_t& total,
                            std::vector<std::uint64_t>& by_rank, std::vector<Node>& out,
                            Ticker& ticker) {
  if (depth == stop) {
    out.push_back(std::move(node));
    return;
  }
  ticker.tick();
  total = checked_count_add(total, 1);
  if (!node.gaps.empty()) {
    unsigned r = rank_of_points(node.gaps, dim);
    by_rank[r - 1] = checked_count_add(by_rank[r - 1], 1);
  }
  for (Node& son : ordinarization_sons(node, ord))
    ordinarization_collect(std::move(son), depth + 1, stop, dim, ord, total, by_rank,
                           out, ticker);
}

void ordinarization_enum_dfs(const Node& node, unsigned dim, const RelaxedOrder& ord,
                             const std::function<void(const Gns&)>& sink,
                             std::uint64_t& count, Ticker& ticker) {
  ticker.tick();
  sink(to_gns(dim, node));
  count = checked_count_add(count, 1);
  for (const Node& son : ordinarization_sons(node, ord))
    ordinarization_enum_dfs(son, dim, ord, sink, count, ticker);
}

Node ordinary_node(unsigned genus, unsigned dim, const RelaxedOrder& ord) {
  std::vector<Point> seg = ord.initial_segment(static_cast<std::size_t>(genus) + 1);
  Node n;
  n.gaps.assign(seg.begin() + 1, seg.end());
  std::sort(n.gaps.begin(), n.gaps.end());
  n.atoms = gaps_to_generators(n.gaps, dim, ord);
  return n;
}

void require_dim(const RelaxedOrder& ord, unsigned dim) {
  if (dim == 0) throw InvalidInput("dimension must be >= 1");
  if (ord.dim() != dim) throw DimensionMismatch("order dimension does not match");
}

// Preorder skeleton of an enumeration: direct emissions interleaved with
// deferred subtrees, so a parallel run can reproduce the serial order.
struct EmissionPlan {
  struct Event {
    bool subtree;
    std::size_t index;  // into items (subtree) or emits (direct)
  };
  std::vector<Event> events;
  std::vector<Gns> emits;

  void emit(Gns g) {
    events.push_back({false, emits.size()});
    emits.push_back(std::move(g));
  }
  void defer(std::size_t item_index) { events.push_back({true, item_index}); }
};

}  // namespace

Gns ordinary_semigroup(unsigned genus, unsigned dim, const RelaxedOrder& ord) {
  require_dim(ord, dim);
  return to_gns(dim, ordinary_node(genus, dim, ord));
}

CountReport count_genus_tree(unsigned genus, unsigned dim, const RelaxedOrder& ord,
                             const EnumOptions& opts) {
  require_dim(ord, dim);
  CountReport r;
  r.genus = genus;
  r.dim = dim;
  r.per_genus.assign(static_cast<std::size_t>(genus) + 1, 0);
  r.per_genus[0] = 1;
  if (genus == 0) {
    r.total = 1;
    return r;
  }

  Ticker ticker{opts.deadline};
  Node root = root_node(dim);
  unsigned threads = resolve_threads(opts.threads);
  if (threads <= 1) {
    genus_count_dfs(root, nullptr, 0, genus, ord, r.per_genus, ticker);
  } else {
    unsigned stop = std::min(opts.split_depth, genus - 1);
    std::vector<GenusItem> items;
    genus_collect(std::move(root), nullptr, 0, stop, ord, r.per_genus, items, ticker);
    std::vector<std::vector<std::uint64_t>> partial(
        items.size(), std::vector<std::uint64_t>(genus + 1, 0));
    run_pool(threads, 0, items.size(), [&](std::size_t i) {
      Ticker t{opts.deadline};
      const GenusItem& it = items[i];
      genus_count_dfs(it.node, it.frob ? &*it.frob : nullptr, stop, genus, ord,
                      partial[i], t);
    });
    for (const auto& p : partial)
      for (std::size_t k = 0; k <= genus; ++k)
        r.per_genus[k] = checked_count_add(r.per_genus[k], p[k]);
  }
  r.total = r.per_genus[genus];
  return r;
}

CountReport count_ordinarization(unsigned genus, unsigned dim, const RelaxedOrder& ord,
                                 const EnumOptions& opts) {
  require_dim(ord, dim);
  CountReport r;
  r.genus = genus;
  r.dim = dim;
  r.by_rank.assign(dim, 0);

  Ticker ticker{opts.deadline};
  Node root = ordinary_node(genus, dim, ord);
  unsigned threads = resolve_threads(opts.threads);
  if (threads <= 1 || genus == 0) {
    ordinarization_count_dfs(root, dim, ord, r.total, r.by_rank, ticker);
    return r;
  }

  unsigned stop = std::max(1u, std::min(opts.split_depth, genus));
  std::vector<Node> items;
  ordinarization_collect(std::move(root), 0, stop, dim, ord, r.total, r.by_rank, items,
                         ticker);
  std::vector<std::uint64_t> totals(items.size(), 0);
  std::vector<std::vector<std::uint64_t>> ranks(items.size(),
                                                std::vector<std::uint64_t>(dim, 0));
  run_pool(threads, 0, items.size(), [&](std::size_t i) {
    Ticker t{opts.deadline};
    ordinarization_count_dfs(items[i], dim, ord, totals[i], ranks[i], t);
  });
  for (std::size_t i = 0; i < items.size(); ++i) {
    r.total = checked_count_add(r.total, totals[i]);
    for (unsigned k = 0; k < dim; ++k)
      r.by_rank[k] = checked_count_add(r.by_rank[k], ranks[i][k]);
  }
  return r;
}

std::uint64_t enumerate_genus(unsigned genus, unsigned dim, const RelaxedOrder& ord,
                              const std::function<void(const Gns&)>& sink,
                              TreeMethod method, const EnumOptions& opts) {
  require_dim(ord, dim);
  if (!sink) throw InvalidInput("sink must not be empty");
  Ticker ticker{opts.deadline};
  unsigned threads = resolve_threads(opts.threads);
  std::uint64_t count = 0;

  if (threads <= 1 || genus == 0) {
    if (method == TreeMethod::GenusTree) {
      Node root = root_node(dim);
      genus_enum_dfs(root, nullptr, 0, genus, dim, ord, sink, count, ticker);
    } else {
      Node root = ordinary_node(genus, dim, ord);
      ordinarization_enum_dfs(root, dim, ord, sink, count, ticker);
    }
    return count;
  }

  // Parallel: record the serial preorder as direct emissions plus deferred
  // subtrees, compute subtree buffers in index windows, and flush in order.
  // Output bytes are identical to a single-threaded run.
  EmissionPlan plan;
  std::vector<GenusItem> items;
  if (method == TreeMethod::GenusTree) {
    // Only depth == genus nodes are emitted, so the skeleton consists of
    // deferred subtrees alone.
    unsigned stop = std::min(opts.split_depth, genus);
    struct Walk {
      unsigned stop;
      const RelaxedOrder& ord;
      EmissionPlan& plan;
      std::vector<GenusItem>& items;
      Ticker& ticker;
      void operator()(Node node, const Point* frob, unsigned depth) {
        if (depth == stop) {
          plan.defer(items.size());
          items.push_back({std::move(node),
                           frob ? std::optional<Point>(*frob) : std::nullopt});
          return;
        }
        ticker.tick();
        for_each_unbounded(node, frob, ord, [&](const Point& v) {
          (*this)(genus_child(node, v), &v, depth + 1);
        });
      }
    } walk{stop, ord, plan, items, ticker};
    walk(root_node(dim), nullptr, 0);
  } else {
    unsigned stop = std::max(1u, std::min(opts.split_depth, genus));
    struct Walk {
      unsigned stop, dim;
      const RelaxedOrder& ord;
      EmissionPlan& plan;
      std::vector<GenusItem>& items;
      Ticker& ticker;
      void operator()(Node node, unsigned depth) {
        if (depth == stop) {
          plan.defer(items.size());
          items.push_back({std::move(node), std::nullopt});
          return;
        }
        ticker.tick();
        plan.emit(to_gns(dim, node));
        for (Node& son : ordinarization_sons(node, ord))
          (*this)(std::move(son), depth + 1);
      }
    } walk{stop, dim, ord, plan, items, ticker};
    walk(ordinary_node(genus, dim, ord), 0);
  }

  std::vector<std::vector<Gns>> buffers(items.size());
  std::size_t ev = 0;
  auto flush_below = [&](std::size_t hi) {
    while (ev < plan.events.size()) {
      const auto& e = plan.events[ev];
      if (e.subtree && e.index >= hi) break;
      if (e.subtree) {
        for (const Gns& g : buffers[e.index]) {
          sink(g);
          count = checked_count_add(count, 1);
        }
        buffers[e.index] = {};
      } else {
        sink(plan.emits[e.index]);
        count = checked_count_add(count, 1);
      }
      ++ev;
    }
  };

  const unsigned item_depth =
      method == TreeMethod::GenusTree
          ? std::min(opts.split_depth, genus)
          : std::max(1u, std::min(opts.split_depth, genus));
  const std::size_t window = static_cast<std::size_t>(threads) * 8;
  for (std::size_t w0 = 0; w0 < items.size(); w0 += window) {
    std::size_t hi = std::min(w0 + window, items.size());
    run_pool(threads, w0, hi, [&](std::size_t i) {
      Ticker t{opts.deadline};
      std::uint64_t sub = 0;
      auto collect = [&buffers, i](const Gns& g) { buffers[i].push_back(g); };
      if (method == TreeMethod::GenusTree) {
        genus_enum_dfs(items[i].node, items[i].frob ? &*items[i].frob : nullptr,
                       item_depth, genus, dim, ord, collect, sub, t);
      } else {
        ordinarization_enum_dfs(items[i].node, dim, ord, collect, sub, t);
      }
    });
    flush_below(hi);
  }
  flush_below(std::numeric_limits<std::size_t>::max());
  return count;
}

std::vector<Gns> sons_genus_tree(const Gns& s, const RelaxedOrder& ord) {
  require_dim(ord, s.dim());
  Node node{s.gaps(), s.minimal_generators()};
  FrobeniusValue f = s.frobenius_element(ord);
  std::vector<Gns> out;
  for_each_unbounded(node, f.at ? &*f.at : nullptr, ord, [&](const Point& v) {
    out.push_back(to_gns(s.dim(), genus_child(node, v)));
  });
  return out;
}

std::vector<Gns> sons_ordinarization(const Gns& t, const RelaxedOrder& ord) {
  require_dim(ord, t.dim());
  Node node{t.gaps(), t.minimal_generators()};
  std::vector<Gns> out;
  for (const Node& son : ordinarization_sons(node, ord))
    out.push_back(to_gns(t.dim(), son));
  return out;
}

Gns random_gns(unsigned genus, unsigned dim, std::uint64_t seed) {
  if (dim == 0) throw InvalidInput("dimension must be >= 1");
  std::mt19937_64 rng(seed);
  Node node = root_node(dim);
  for (unsigned step = 0; step < genus; ++step) {
    const std::uint64_t n = node.atoms.size();
    // rejection sampling: drop draws in the final partial block of size
    // 2^64 mod n, then reduce; exact uniformity, reproducible everywhere
    const std::uint64_t tail =
        (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;
    const std::uint64_t threshold = 0 - tail;
    std::uint64_t x = rng();
    while (tail != 0 && x >= threshold) x = rng();
    node = genus_child(node, node.atoms[x % n]);
  }
  return to_gns(dim, node);
}

unsigned rank_of_points(const std::vector<Point>& pts, unsigned dim) {
  const std::size_t rows = pts.size();
  if (rows == 0) return 0;
  std::vector<__int128> m(rows * dim);
  for (std::size_t i = 0; i < rows; ++i) {
    if (pts[i].dim() != dim) throw DimensionMismatch("point dimension does not match");
    for (unsigned j = 0; j < dim; ++j)
      m[i * dim + j] = static_cast<__int128>(pts[i][j]);
  }
  auto at = [&](std::size_t i, unsigned j) -> __int128& { return m[i * dim + j]; };

  // fraction-free elimination: entries stay (r+1)-minors of the input, so the
  // division by the previous pivot is exact and the integer rank is the
  // rank over Q
  unsigned r = 0;
  __int128 prev = 1;
  for (unsigned c = 0; c < dim && r < rows; ++c) {
    std::size_t pivot = r;
    for (std::size_t i = r; i < rows; ++i) {
      auto mag = [](__int128 v) { return v < 0 ? -v : v; };
      if (mag(at(i, c)) > mag(at(pivot, c))) pivot = i;
    }
    if (at(pivot, c) == 0) continue;
    if (pivot != r)
      for (unsigned j = 0; j < dim; ++j) std::swap(at(pivot, j), at(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (unsigned j = c + 1; j < dim; ++j)
        at(i, j) = (at(i, j) * at(r, c) - at(i, c) * at(r, j)) / prev;
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

}  // namespace gns
