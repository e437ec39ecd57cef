#ifndef GPA_ORACLE_HPP
#define GPA_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gpa/graph.hpp"

namespace gpa {

// One syllable of a graph-product element: a non-identity element of one
// vertex group.
struct Syllable {
  int vertex = 0;
  int element = 0;  // index into the vertex's table, never 0
  bool operator==(const Syllable&) const = default;
  auto operator<=>(const Syllable&) const = default;
};

// Canonical fully reduced syllable sequence: no identity syllables, no two
// same-vertex syllables that commuting swaps could bring together, and
// lexicographically least among shuffle-equivalent words (left-greedy under
// the global vertex order).
using NormalForm = std::vector<Syllable>;

// Rewrites an arbitrary syllable word to its canonical normal form: drop
// identity syllables, merge same-vertex syllables whenever commuting swaps
// can make them adjacent, repeat to a fixpoint, then shuffle left-greedily.
// Requires every referenced vertex to carry a table.
NormalForm reduce(const ProductGraph& g, const std::vector<Syllable>& word);

NormalForm multiply(const ProductGraph& g, const NormalForm& x,
                    const NormalForm& y);
NormalForm inverse_of(const ProductGraph& g, const NormalForm& x);

struct SubgroupOrder {
  bool exceeded = false;
  std::uint64_t order = 0;  // meaningful when !exceeded
};

// Order of the subgroup generated by the vertex groups of s, by closure
// enumeration; ExceedsBound (exceeded=true) when the closure passes `bound`.
SubgroupOrder subgroup_order(const ProductGraph& g, const SubgraphRef& s,
                             std::uint64_t bound);

inline constexpr std::size_t kDefaultBallCap = 2'000'000;

// Ball of the word metric with generating set = all non-identity elements of
// all vertex groups. Elements sorted by (distance, lexicographic); edges are
// index pairs u < v, sorted. Deterministic regardless of thread count.
struct CayleyBall {
  std::vector<NormalForm> elements;
  std::vector<int> distance;                 // parallel to elements
  std::vector<std::pair<int, int>> edges;
  bool closed = false;  // BFS exhausted the group before the radius
};

// OpenMP frontier expansion when built with OpenMP; falls back to the serial
// code path otherwise. Throws BoundExceededError past `cap` elements.
CayleyBall cayley_ball(const ProductGraph& g, int radius,
                       std::size_t cap = kDefaultBallCap);

// Reference implementation: same contract, single-threaded by construction.
// Kept for differential testing and benchmarking against the kernel above.
CayleyBall cayley_ball_serial(const ProductGraph& g, int radius,
                              std::size_t cap = kDefaultBallCap);

enum class EndsEstimate { Zero, One, Two, Many, Inconclusive };

struct EndsEstimateResult {
  EndsEstimate verdict = EndsEstimate::Inconclusive;
  std::optional<std::uint64_t> order;  // exact order when verdict = Zero
  // Component counts of B_R - B_inner for R = inner+1 .. outer (components
  // that meet the radius-R sphere).
  std::vector<int> component_counts;
};

// Empirical end counting on the Cayley ball: if the BFS closes the group is
// finite; otherwise the sphere-meeting component counts of the annuli decide
// 1, 2 or many ends once they hold steady for `stability` consecutive radii.
EndsEstimateResult estimate_ends(const ProductGraph& g, int inner = 4,
                                 int outer = 12, int stability = 3,
                                 std::size_t cap = kDefaultBallCap);

}  // namespace gpa

#endif
