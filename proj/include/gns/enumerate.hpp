#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gns/gns.hpp"
#include "gns/order.hpp"

namespace gns {

/// Which tree is walked to visit all semigroups of a given genus exactly once.
/// GenusTree descends from N^d, removing one generator per level, and reaches
/// genus g at depth g. Ordinarization walks the forest on the fixed-genus set
/// rooted at the ordinary semigroup.
enum class TreeMethod { GenusTree, Ordinarization };

struct CountReport {
  unsigned genus = 0;
  unsigned dim = 0;
  std::uint64_t total = 0;
  /// Ordinarization method: [r-1] = number of gap sets of Q-rank r, r = 1..dim.
  /// Sums to total for genus >= 1 (the empty genus-0 gap set has rank 0).
  std::vector<std::uint64_t> by_rank;
  /// GenusTree method: [k] = number of semigroups of genus k, k = 0..genus.
  std::vector<std::uint64_t> per_genus;
};

struct EnumOptions {
  /// 0 = use the GNS_THREADS environment variable, else hardware concurrency.
  unsigned threads = 0;
  /// Tree depth at which the traversal splits into parallel work items.
  unsigned split_depth = 2;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// The semigroup whose gaps are the g smallest nonzero points in `ord`.
/// Requires an order with enumerable initial segments when g >= 1.
Gns ordinary_semigroup(unsigned genus, unsigned dim, const RelaxedOrder& ord);

/// Count semigroups of every genus up to `genus` in one descent from N^d;
/// the last level is counted from its parents without materializing it.
CountReport count_genus_tree(unsigned genus, unsigned dim, const RelaxedOrder& ord,
                             const EnumOptions& opts = {});

/// Count semigroups of exactly `genus`, classified by the rank of the matrix
/// whose rows are the gaps.
CountReport count_ordinarization(unsigned genus, unsigned dim, const RelaxedOrder& ord,
                                 const EnumOptions& opts = {});

/// Visit every semigroup of the given genus exactly once, in a deterministic
/// order (identical for any thread count). Returns the number visited.
/// A throwing sink aborts the walk.
std::uint64_t enumerate_genus(unsigned genus, unsigned dim, const RelaxedOrder& ord,
                              const std::function<void(const Gns&)>& sink,
                              TreeMethod method = TreeMethod::Ordinarization,
                              const EnumOptions& opts = {});

/// Children of S in the genus tree: S minus one unbounded generator each,
/// sorted by gap set.
std::vector<Gns> sons_genus_tree(const Gns& s, const RelaxedOrder& ord);

/// Sons of T in the fixed-genus forest: adjoin a special gap preceding the
/// multiplicity, then remove an unbounded generator other than the adjoined
/// gap. Sorted by gap set. Every son's ordinarization transform gives back T.
std::vector<Gns> sons_ordinarization(const Gns& t, const RelaxedOrder& ord);

/// Pseudo-random semigroup: g successive removals of a uniformly chosen
/// minimal generator, driven by a mt19937_64 stream seeded with `seed`
/// (index selection by rejection sampling; same seed, same result, on every
/// platform).
Gns random_gns(unsigned genus, unsigned dim, std::uint64_t seed);

/// Rank over Q of the matrix whose rows are the given points, computed
/// exactly by fraction-free elimination in 128-bit integers.
unsigned rank_of_points(const std::vector<Point>& pts, unsigned dim);

}  // namespace gns
