#ifndef GPA_ENUMERATE_HPP
#define GPA_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gpa/graph.hpp"

namespace gpa {

// One isomorphism class of connected simple graphs, vertices 0..n-1.
struct GraphClass {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// All connected graphs with 1..max_n vertices, one representative per
// isomorphism class, deduplicated by canonical adjacency matrix over all
// vertex permutations. Deterministic order: by (n, edge count, edge mask).
// Class counts for n = 1..7: 1, 1, 2, 6, 21, 112, 853.
std::vector<GraphClass> connected_graph_classes(int max_n);

// The four-status annotation palette used by the exhaustive suites.
enum class Status {
  FiniteTwo,       // Z2: finite order 2
  InfOneSS,        // infinite, one end, semistable
  InfManySS,       // infinite, many ends, semistable
  InfOneNonSS,     // infinite, one end, not semistable
};

inline constexpr int kStatusCount = 4;

VertexGroupInfo make_status_vertex(std::string name, Status s);

// Vertex names "a", "b", ... with the given statuses, over gc's edges.
ProductGraph palette_graph(const GraphClass& gc,
                           const std::vector<Status>& statuses);

std::vector<Status> nth_assignment(int n, std::uint64_t index);

// Runs `body` over every (graph class, status assignment) instance with
// graphs of at most max_n vertices. `body` returns an error message on
// failure. The parallel driver and the serial reference produce identical
// results: instance count, failure count, and the failure with the smallest
// instance index.
struct SweepResult {
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::uint64_t first_failure_index = 0;
  std::string first_failure;  // empty when failures == 0
};

using SweepBody = std::function<std::optional<std::string>(
    const GraphClass&, const std::vector<Status>&, const ProductGraph&)>;

SweepResult run_sweep(int max_n, bool parallel, const SweepBody& body);

}  // namespace gpa

#endif
