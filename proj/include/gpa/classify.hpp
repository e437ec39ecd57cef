#ifndef GPA_CLASSIFY_HPP
#define GPA_CLASSIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpa/graph.hpp"

namespace gpa {

enum class EndsClass { Zero, One, MoreThanOne, Unknown };
enum class SsClass { Semistable, NotSemistable, Unknown };

struct EndsVerdict {
  EndsClass kind = EndsClass::Unknown;
  // Witness for MoreThanOne: a single multi-ended vertex on a complete graph
  // (case i) or a finite complete separator (case ii). Exactly one is set.
  std::optional<int> witness_vertex;
  std::optional<Separator> witness_separator;
  std::optional<std::string> note;  // e.g. "trivial group" for the empty graph
};

struct BadVertices {
  // A vertex is bad when its group is non-semistable and its link spans a
  // finite subgroup (link complete, all link groups finite). `definite` holds
  // the semistable=No cases, `potential` the semistable=Unknown ones that
  // block a Semistable verdict.
  std::vector<int> definite;
  std::vector<int> potential;
};

struct SemistabilityVerdict {
  SsClass kind = SsClass::Unknown;
  std::optional<int> witness;  // first definite bad vertex, NotSemistable only
  BadVertices bad;
  bool componentwise = false;  // input was disconnected; verdicts combined
};

BadVertices bad_vertices(const ProductGraph& g);

// Semistability of the graph product per the two-condition criterion:
// NotSemistable iff a definite bad vertex exists; Semistable iff neither
// definite nor potential bad vertices exist; Unknown otherwise. Disconnected
// graphs combine componentwise (any NotSemistable wins, then any Unknown).
// Throws InputError unless every vertex group is finitely presented.
SemistabilityVerdict semistability_of(const ProductGraph& g);

// Number-of-ends classification:
//   Zero        iff g is complete with all vertex groups finite (or empty);
//   MoreThanOne iff g is complete with exactly one multi-ended vertex group
//               and all others finite, or g has a finite complete separator;
//   One         iff the group is infinite and neither case applies (two
//               infinite factors on a complete graph force one end);
//   Unknown     only on a complete graph whose single infinite vertex group
//               has unknown ends.
EndsVerdict ends_of(const ProductGraph& g,
                    int separator_bound = kDefaultVertexBound);

// ends_of(full_subgraph(g, s)) = One  AND  semistability_of(...) =
// Semistable, three-valued. Returns Unknown (rather than throwing) when a
// vertex group of s is not finitely presented.
Tri one_ended_and_semistable(const ProductGraph& g, const SubgraphRef& s,
                             int separator_bound = kDefaultVertexBound);

// One analysis session: memoizes induced subgraphs and their verdicts. Not
// for sharing across threads; create one per thread instead.
class Analyzer {
 public:
  explicit Analyzer(const ProductGraph& g,
                    int separator_bound = kDefaultVertexBound);

  const ProductGraph& graph() const { return *g_; }
  int separator_bound() const { return separator_bound_; }

  const ProductGraph& induced(const SubgraphRef& s);
  EndsVerdict ends(const SubgraphRef& s);
  SemistabilityVerdict semistability(const SubgraphRef& s);
  Tri one_ended_and_semistable(const SubgraphRef& s);
  Tri spans_finite(const SubgraphRef& s) const;

 private:
  struct Entry {
    ProductGraph graph;
    std::optional<EndsVerdict> ends;
    std::optional<SemistabilityVerdict> ss;
  };
  Entry& entry(const SubgraphRef& s);

  const ProductGraph* g_;
  int separator_bound_;
  std::map<std::vector<int>, Entry> memo_;
};

}  // namespace gpa

#endif
