#include "gpa/classify.hpp"

#include <algorithm>

#include "gpa/errors.hpp"
#include "gpa/presentation.hpp"

namespace gpa {

BadVertices bad_vertices(const ProductGraph& g) {
  BadVertices out;
  for (int v = 0; v < g.size(); ++v) {
    const Tri flag = g.vertex(v).semistable;
    if (flag == Tri::Yes) continue;
    if (spans_finite_subgroup(g, link(g, v)) != Tri::Yes) continue;
    (flag == Tri::No ? out.definite : out.potential).push_back(v);
  }
  return out;
}

SemistabilityVerdict semistability_of(const ProductGraph& g) {
  if (!check_finitely_presented(g))
    throw InputError(
        "semistability criterion requires finitely presented vertex groups");
  SemistabilityVerdict v;
  v.bad = bad_vertices(g);
  v.componentwise = components(g).size() > 1;
  // Links live inside components, so the global bad-vertex scan equals the
  // componentwise combination: any NotSemistable component wins, then any
  // Unknown one.
  if (!v.bad.definite.empty()) {
    v.kind = SsClass::NotSemistable;
    v.witness = v.bad.definite.front();
  } else if (!v.bad.potential.empty()) {
    v.kind = SsClass::Unknown;
  } else {
    v.kind = SsClass::Semistable;
  }
  return v;
}

EndsVerdict ends_of(const ProductGraph& g, int separator_bound) {
  EndsVerdict out;
  if (g.empty()) {
    out.kind = EndsClass::Zero;
    out.note = "trivial group";
    return out;
  }
  if (is_complete(g, SubgraphRef::whole(g))) {
    std::vector<int> infinite;
    for (int v = 0; v < g.size(); ++v)
      if (!g.vertex(v).order.is_finite()) infinite.push_back(v);
    if (infinite.empty()) {
      out.kind = EndsClass::Zero;
      return out;
    }
    if (infinite.size() >= 2) {
      // Direct product of two infinite factors: one end regardless of the
      // factors' own end counts.
      out.kind = EndsClass::One;
      return out;
    }
    const int v = infinite.front();
    switch (g.vertex(v).ends) {
      case VertexEnds::One:
        out.kind = EndsClass::One;
        return out;
      case VertexEnds::Two:
      case VertexEnds::Many:
        out.kind = EndsClass::MoreThanOne;
        out.witness_vertex = v;
        return out;
      default:
        out.kind = EndsClass::Unknown;
        return out;
    }
  }
  // Not complete: the group is infinite (two non-adjacent vertex groups span
  // a free product), and it has more than one end exactly when a finite
  // complete separator exists.
  if (auto sep = first_finite_complete_separator(g, separator_bound)) {
    out.kind = EndsClass::MoreThanOne;
    out.witness_separator = std::move(*sep);
    return out;
  }
  out.kind = EndsClass::One;
  return out;
}

Tri one_ended_and_semistable(const ProductGraph& g, const SubgraphRef& s,
                             int separator_bound) {
  ProductGraph sub = full_subgraph(g, s);
  EndsVerdict e = ends_of(sub, separator_bound);
  Tri one_ended = e.kind == EndsClass::One      ? Tri::Yes
                  : e.kind == EndsClass::Unknown ? Tri::Unknown
                                                 : Tri::No;
  if (one_ended == Tri::No) return Tri::No;
  if (!check_finitely_presented(sub)) return Tri::Unknown;
  SemistabilityVerdict ss = semistability_of(sub);
  Tri semistable = ss.kind == SsClass::Semistable ? Tri::Yes
                   : ss.kind == SsClass::Unknown  ? Tri::Unknown
                                                  : Tri::No;
  return tri_and(one_ended, semistable);
}

Analyzer::Analyzer(const ProductGraph& g, int separator_bound)
    : g_(&g), separator_bound_(separator_bound) {}

Analyzer::Entry& Analyzer::entry(const SubgraphRef& s) {
  auto it = memo_.find(s.verts);
  if (it == memo_.end())
    it = memo_.emplace(s.verts, Entry{full_subgraph(*g_, s), {}, {}}).first;
  return it->second;
}

const ProductGraph& Analyzer::induced(const SubgraphRef& s) {
  return entry(s).graph;
}

EndsVerdict Analyzer::ends(const SubgraphRef& s) {
  Entry& e = entry(s);
  if (!e.ends) {
    EndsVerdict v = ends_of(e.graph, separator_bound_);
    // Witnesses computed on the induced graph use local indices; translate
    // back to the parent graph's vertex order.
    if (v.witness_vertex) *v.witness_vertex = s.verts[*v.witness_vertex];
    if (v.witness_separator) {
      for (int& x : v.witness_separator->delta.verts) x = s.verts[x];
      for (auto& part : v.witness_separator->parts)
        for (int& x : part) x = s.verts[x];
    }
    e.ends = std::move(v);
  }
  return *e.ends;
}

SemistabilityVerdict Analyzer::semistability(const SubgraphRef& s) {
  Entry& e = entry(s);
  if (!e.ss) {
    SemistabilityVerdict v = semistability_of(e.graph);
    if (v.witness) *v.witness = s.verts[*v.witness];
    for (int& x : v.bad.definite) x = s.verts[x];
    for (int& x : v.bad.potential) x = s.verts[x];
    e.ss = std::move(v);
  }
  return *e.ss;
}

Tri Analyzer::one_ended_and_semistable(const SubgraphRef& s) {
  EndsVerdict e = ends(s);
  Tri one_ended = e.kind == EndsClass::One      ? Tri::Yes
                  : e.kind == EndsClass::Unknown ? Tri::Unknown
                                                 : Tri::No;
  if (one_ended == Tri::No) return Tri::No;
  if (!check_finitely_presented(induced(s))) return Tri::Unknown;
  SemistabilityVerdict ss = semistability(s);
  Tri semistable = ss.kind == SsClass::Semistable ? Tri::Yes
                   : ss.kind == SsClass::Unknown  ? Tri::Unknown
                                                  : Tri::No;
  return tri_and(one_ended, semistable);
}

Tri Analyzer::spans_finite(const SubgraphRef& s) const {
  return spans_finite_subgroup(*g_, s);
}

}  // namespace gpa
