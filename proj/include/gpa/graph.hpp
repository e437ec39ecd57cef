#ifndef GPA_GRAPH_HPP
#define GPA_GRAPH_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpa/table.hpp"

namespace gpa {

// Three-valued logic for annotations and queries that may be undetermined.
enum class Tri { No, Unknown, Yes };

inline Tri tri_and(Tri a, Tri b) {
  if (a == Tri::No || b == Tri::No) return Tri::No;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::Yes;
}

// Number-of-ends annotation on a single vertex group.
enum class VertexEnds { Zero, One, Two, Many, Unknown };

// Finite(n) with n >= 1, or infinite.
struct GroupOrder {
  std::optional<std::uint64_t> value;  // nullopt = infinite

  static GroupOrder infinite() { return {std::nullopt}; }
  static GroupOrder finite(std::uint64_t n) { return {n}; }
  bool is_finite() const { return value.has_value(); }
  bool operator==(const GroupOrder&) const = default;
};

// A letter of a relator word: generator index with exponent +1 or -1.
struct Letter {
  int gen = 0;
  int exp = 1;
  bool operator==(const Letter&) const = default;
};
using Word = std::vector<Letter>;

// Presentation data for one vertex group alone. Generator symbols are
// unqualified here; the standard-presentation construction qualifies them
// with the owning vertex name.
struct VertexPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;  // letters index into `generators`
  bool operator==(const VertexPresentation&) const = default;
};

struct VertexGroupInfo {
  std::string name;
  GroupOrder order = GroupOrder::infinite();
  VertexEnds ends = VertexEnds::Unknown;
  Tri semistable = Tri::Unknown;
  bool finitely_presented = false;
  std::optional<VertexPresentation> presentation;
  std::shared_ptr<const FiniteGroupTable> table;

  bool operator==(const VertexGroupInfo& o) const;
};

// The defining data of a graph product: a finite simple graph whose vertices
// carry group annotations. The vertex list order is the global tie-breaking
// order used by every enumeration in the toolkit.
//
// Construction keeps the raw edge list so that validate_graph can report
// self-loops and duplicates; every other operation assumes a valid graph.
// Instances are immutable after construction.
class ProductGraph {
 public:
  ProductGraph() = default;
  // Throws InputError if an edge endpoint names no vertex (such a graph is
  // not representable); all other invariant violations are left for
  // validate_graph to report.
  ProductGraph(std::vector<VertexGroupInfo> vertices,
               const std::vector<std::pair<std::string, std::string>>& edges);

  int size() const { return static_cast<int>(vertices_.size()); }
  bool empty() const { return vertices_.empty(); }
  const VertexGroupInfo& vertex(int i) const { return vertices_[i]; }
  const std::vector<VertexGroupInfo>& vertices() const { return vertices_; }

  std::optional<int> find_vertex(std::string_view name) const;
  int require_vertex(std::string_view name) const;  // throws InputError

  bool adjacent(int u, int v) const { return matrix_[u * size() + v] != 0; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  // Canonical edge list: u < v, sorted, deduplicated.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::pair<std::string, std::string>>& raw_edges() const {
    return raw_edges_;
  }

  bool operator==(const ProductGraph& o) const {
    return vertices_ == o.vertices_ && edges_ == o.edges_;
  }

 private:
  std::vector<VertexGroupInfo> vertices_;
  std::vector<std::pair<std::string, std::string>> raw_edges_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<char> matrix_;
};

// An ordered subset of the vertices of some ProductGraph, always interpreted
// as the full (induced) subgraph on those vertices. Stored sorted in global
// vertex order.
struct SubgraphRef {
  std::vector<int> verts;

  SubgraphRef() = default;
  explicit SubgraphRef(std::vector<int> v);
  static SubgraphRef from_names(const ProductGraph& g,
                                const std::vector<std::string>& names);
  static SubgraphRef whole(const ProductGraph& g);
  static SubgraphRef from_mask(std::uint64_t mask);

  int size() const { return static_cast<int>(verts.size()); }
  bool empty() const { return verts.empty(); }
  bool contains(int v) const;
  std::uint64_t mask() const;  // requires all indices < 64
  std::vector<std::string> names(const ProductGraph& g) const;

  bool operator==(const SubgraphRef&) const = default;
  auto operator<=>(const SubgraphRef&) const = default;
};

SubgraphRef set_union(const SubgraphRef& a, const SubgraphRef& b);
SubgraphRef set_intersection(const SubgraphRef& a, const SubgraphRef& b);
SubgraphRef set_difference(const SubgraphRef& a, const SubgraphRef& b);

struct Violation {
  std::string code;     // stable identifier, e.g. "self-loop"
  std::string detail;   // human-readable, names the offending vertex/edge
};

// Checks every ProductGraph and VertexGroupInfo invariant; returns an empty
// list iff the graph is valid. Never throws.
std::vector<Violation> validate_graph(const ProductGraph& g);

// Induced subgraph with annotations copied unchanged. Vertex order inherited.
ProductGraph full_subgraph(const ProductGraph& g, const SubgraphRef& s);

SubgraphRef link(const ProductGraph& g, int v);
SubgraphRef star(const ProductGraph& g, int v);
SubgraphRef link(const ProductGraph& g, std::string_view name);
SubgraphRef star(const ProductGraph& g, std::string_view name);

// Empty and singleton subsets are complete.
bool is_complete(const ProductGraph& g, const SubgraphRef& s);

// Yes iff s is complete and every vertex group of s is finite (then <s> is
// the direct product of its finite vertex groups); No otherwise. Orders are
// always known, so Unknown never occurs.
Tri spans_finite_subgroup(const ProductGraph& g, const SubgraphRef& s);

inline constexpr int kDefaultVertexBound = 24;

struct Separator {
  SubgraphRef delta;
  std::vector<std::vector<int>> parts;  // components of V - delta, sorted
  bool minimal = false;
};

// Exhaustive enumeration of complete subgraphs Delta with all-finite vertex
// groups whose removal leaves >= 2 connected components. Includes Delta = {}
// exactly when g is disconnected. Sorted by (|Delta|, lexicographic vertex
// order); minimal separators flagged. Throws BoundExceededError when the
// graph has more than max_vertices vertices.
std::vector<Separator> find_finite_complete_separators(
    const ProductGraph& g, int max_vertices = kDefaultVertexBound);

// First separator in the enumeration order above, without materializing the
// full list. Same bound behavior.
std::optional<Separator> first_finite_complete_separator(
    const ProductGraph& g, int max_vertices = kDefaultVertexBound);

// Connected components of the induced subgraph on s, each sorted, ordered by
// smallest vertex.
std::vector<std::vector<int>> components_within(const ProductGraph& g,
                                                const SubgraphRef& s);
std::vector<std::vector<int>> components(const ProductGraph& g);

}  // namespace gpa

#endif
