#ifndef GPA_CERTIFICATE_HPP
#define GPA_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "gpa/classify.hpp"
#include "gpa/graph.hpp"

namespace gpa {

enum class Rule {
  LeafVertex,   // vertex-group annotation is the evidence
  Product,      // direct product of two infinite visual factors
  FiniteIndex,  // core x finite partner; verdict transfers both ways
  AmalgamSS,    // amalgam of two semistable sides over a separating subgraph
  UnionMM,      // union of two one-ended semistable sides, infinite overlap
  SplitNonSS,   // splitting over a finite subgraph with a non-semistable side
};

enum class Verdict { Semistable, NotSemistable };

std::string rule_name(Rule r);

// A finite tree of rule applications certifying a semistability verdict for
// the full subgraph `subject`. All subgraph refs use root-graph vertex
// indices. Payload use per rule:
//   LeafVertex:  leaf_vertex
//   Product:     part_a = factor1, part_b = factor2; no children
//   FiniteIndex: part_a = core, part_b = finite partner; child certifies core
//   AmalgamSS:   part_a = A, part_b = B, part_c = C; children certify A, B
//   UnionMM:     part_a = A, part_b = B; children certify A, B
//   SplitNonSS:  part_a = A, part_b = B, part_c = C; child certifies A
struct Certificate {
  Rule rule = Rule::LeafVertex;
  SubgraphRef subject;
  Verdict verdict = Verdict::Semistable;
  int leaf_vertex = -1;
  SubgraphRef part_a, part_b, part_c;
  std::vector<Certificate> children;

  bool operator==(const Certificate&) const = default;
};

struct CheckViolation {
  std::string path;  // "root", "root.0", "root.0.1", ...
  std::string rule;
  std::string condition;
  std::string explanation;
};

struct CheckReport {
  bool accepted = false;
  std::optional<CheckViolation> first_violation;
};

// Validates every side condition of every node. Independent of the
// semistability classifier on the subject itself: only adjacency, finiteness
// and ends facts, vertex annotations, and child verdicts are consulted
// (UnionMM side conditions run the classifier on the proper subsets A and B).
// Throws InputError for refs that lie outside the graph; everything else is a
// rejection, not an error.
CheckReport check_certificate(const ProductGraph& g, const Certificate& c);

// Builds a certificate whose verdict equals semistability_of(g) and which
// check_certificate accepts. Deterministic. Throws UnknownVerdictError when
// the verdict is not definite, and BoundExceededError (certificate search
// exhausted) if no accepted certificate is found — which the bundled
// strategy does not let happen on definite inputs.
Certificate build_certificate(const ProductGraph& g,
                              int separator_bound = kDefaultVertexBound);

// DOT digraph with one node per rule application, deterministic ids.
std::string export_certificate_dot(const Certificate& c,
                                   const ProductGraph& g);

}  // namespace gpa

#endif
