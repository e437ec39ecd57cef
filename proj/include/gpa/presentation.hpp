#ifndef GPA_PRESENTATION_HPP
#define GPA_PRESENTATION_HPP

#include <string>
#include <vector>

#include "gpa/graph.hpp"

namespace gpa {

// A group presentation with vertex-qualified generator symbols ("a.x") and
// freely reduced relator words. Houses the standard presentation of a graph
// product: vertex relators plus one commutator per pair of generators of
// adjacent vertices.
struct Presentation {
  struct Generator {
    std::string symbol;  // globally unique, vertex-qualified
    std::string vertex;  // owning vertex name
    bool operator==(const Generator&) const = default;
  };

  std::vector<Generator> generators;
  std::vector<Word> relators;  // letters index into `generators`

  // Relators sorted by (length, lexicographic on (symbol, exponent));
  // generators unchanged. The comparison form for presentation identities.
  Presentation canonical() const;

  bool operator==(const Presentation&) const = default;
};

// Plain-text serialization: one "gen <vertex> <symbol>" line per generator,
// one "rel <word>" line per relator with letters space-separated, inverse
// letters written "<symbol>^-1". Relators are emitted in canonical order.
std::string to_text(const Presentation& p);

// The standard presentation of the graph product on g. Every vertex must
// carry presentation data; a vertex with only a multiplication table gets a
// synthesized table presentation (non-identity elements as generators, one
// relator per table cell). Throws InputError when a vertex has neither.
Presentation standard_presentation(const ProductGraph& g);

struct AmalgamDecomposition {
  SubgraphRef graph_a, graph_b, graph_delta;
  Presentation pres_a, pres_b, pres_delta;
};

// Splits g over the separating subgraph delta: the vertices outside delta
// fall into >= 2 components; side A is the first component, side B the rest.
// delta need not be complete, only separating. Throws InputError when delta
// does not separate.
AmalgamDecomposition amalgam_presentations(const ProductGraph& g,
                                           const SubgraphRef& delta);

// The presentation of <s> obtained from the standard presentation of g by
// generator-killing Tietze moves (eliminated generators set trivial, empty
// relators dropped). The result equals standard_presentation(full_subgraph)
// and is asserted to.
Presentation retract_presentation(const ProductGraph& g, const SubgraphRef& s);

// True iff every vertex group is flagged finitely presented (the graph
// itself is finite by construction).
bool check_finitely_presented(const ProductGraph& g);

// Word utilities shared with the oracle and tests.
Word free_reduce(Word w);

}  // namespace gpa

#endif
