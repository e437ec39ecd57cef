#include "gpa/presentation.hpp"

#include <algorithm>
#include <map>

#include "gpa/errors.hpp"

namespace gpa {

Word free_reduce(Word w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

namespace {

// Presentation fragment for a vertex, synthesized from its table when no
// explicit presentation is given: one generator per non-identity element,
// one relator g_i g_j g_k^-1 per table cell (g_0 omitted as the empty word).
VertexPresentation synthesize_from_table(const FiniteGroupTable& t) {
  VertexPresentation p;
  const int n = t.size();
  for (int i = 1; i < n; ++i) p.generators.push_back(t.element_name(i));
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      Word w{{i - 1, 1}, {j - 1, 1}};
      int k = t.mul(i, j);
      if (k != 0) w.push_back({k - 1, -1});
      p.relators.push_back(free_reduce(std::move(w)));
    }
  }
  return p;
}

VertexPresentation fragment_for(const VertexGroupInfo& v) {
  if (v.presentation) return *v.presentation;
  if (v.table) return synthesize_from_table(*v.table);
  throw InputError("vertex '" + v.name +
                   "' has neither a presentation nor a table; cannot build "
                   "the standard presentation");
}

struct WordLess {
  const std::vector<Presentation::Generator>* gens;
  bool letter_less(const Letter& a, const Letter& b) const {
    const std::string& sa = (*gens)[a.gen].symbol;
    const std::string& sb = (*gens)[b.gen].symbol;
    if (sa != sb) return sa < sb;
    return a.exp > b.exp;  // +1 sorts before -1
  }
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == b[i]) continue;
      return letter_less(a[i], b[i]);
    }
    return false;
  }
};

}  // namespace

Presentation Presentation::canonical() const {
  Presentation p = *this;
  std::sort(p.relators.begin(), p.relators.end(), WordLess{&p.generators});
  return p;
}

std::string to_text(const Presentation& p) {
  Presentation c = p.canonical();
  std::string out;
  for (const auto& g : c.generators)
    out += "gen " + g.vertex + " " + g.symbol + "\n";
  for (const auto& w : c.relators) {
    out += "rel";
    for (const auto& l : w) {
      out += " " + c.generators[l.gen].symbol;
      if (l.exp == -1) out += "^-1";
    }
    out += "\n";
  }
  return out;
}

Presentation standard_presentation(const ProductGraph& g) {
  Presentation p;
  // first_gen[v] = index of vertex v's first generator in the global list
  std::vector<int> first_gen(g.size(), 0);
  for (int v = 0; v < g.size(); ++v) {
    first_gen[v] = static_cast<int>(p.generators.size());
    VertexPresentation frag = fragment_for(g.vertex(v));
    for (const auto& sym : frag.generators)
      p.generators.push_back({g.vertex(v).name + "." + sym, g.vertex(v).name});
    for (Word w : frag.relators) {
      for (auto& l : w) l.gen += first_gen[v];
      p.relators.push_back(free_reduce(std::move(w)));
    }
  }
  auto gen_count = [&](int v) {
    int end = v + 1 < g.size() ? first_gen[v + 1]
                               : static_cast<int>(p.generators.size());
    return end - first_gen[v];
  };
  for (auto [v, w] : g.edges()) {
    for (int i = 0; i < gen_count(v); ++i) {
      for (int j = 0; j < gen_count(w); ++j) {
        int a = first_gen[v] + i, b = first_gen[w] + j;
        p.relators.push_back(Word{{a, 1}, {b, 1}, {a, -1}, {b, -1}});
      }
    }
  }
  return p;
}

AmalgamDecomposition amalgam_presentations(const ProductGraph& g,
                                           const SubgraphRef& delta) {
  for (int v : delta.verts)
    if (v < 0 || v >= g.size())
      throw InputError("delta references a vertex outside the graph");
  SubgraphRef rest = set_difference(SubgraphRef::whole(g), delta);
  auto comps = components_within(g, rest);
  if (comps.size() < 2)
    throw InputError("delta does not separate: removing it leaves " +
                     std::to_string(comps.size()) + " component(s)");
  SubgraphRef side_a{comps[0]};
  std::vector<int> rest_b;
  for (std::size_t i = 1; i < comps.size(); ++i)
    rest_b.insert(rest_b.end(), comps[i].begin(), comps[i].end());
  SubgraphRef side_b{std::move(rest_b)};

  AmalgamDecomposition d;
  d.graph_delta = delta;
  d.graph_a = set_union(side_a, delta);
  d.graph_b = set_union(side_b, delta);
  d.pres_a = standard_presentation(full_subgraph(g, d.graph_a));
  d.pres_b = standard_presentation(full_subgraph(g, d.graph_b));
  d.pres_delta = standard_presentation(full_subgraph(g, delta));
  return d;
}

Presentation retract_presentation(const ProductGraph& g, const SubgraphRef& s) {
  for (int v : s.verts)
    if (v < 0 || v >= g.size())
      throw InputError("subgraph references a vertex outside the graph");
  Presentation whole = standard_presentation(g);

  std::vector<char> keep_vertex(g.size(), 0);
  for (int v : s.verts) keep_vertex[v] = 1;

  // Tietze elimination: each generator of a dropped vertex is set trivial,
  // its letters deleted everywhere, and relators that become empty vanish.
  Presentation out;
  std::vector<int> remap(whole.generators.size(), -1);
  for (std::size_t i = 0; i < whole.generators.size(); ++i) {
    int v = g.require_vertex(whole.generators[i].vertex);
    if (keep_vertex[v]) {
      remap[i] = static_cast<int>(out.generators.size());
      out.generators.push_back(whole.generators[i]);
    }
  }
  for (const Word& w : whole.relators) {
    Word kept;
    for (const Letter& l : w)
      if (remap[l.gen] >= 0) kept.push_back({remap[l.gen], l.exp});
    kept = free_reduce(std::move(kept));
    if (!kept.empty()) out.relators.push_back(std::move(kept));
  }

  if (out.canonical() != standard_presentation(full_subgraph(g, s)).canonical())
    throw Error("retract presentation disagrees with the standard presentation "
                "of the full subgraph");
  return out;
}

bool check_finitely_presented(const ProductGraph& g) {
  for (const auto& v : g.vertices())
    if (!v.finitely_presented) return false;
  return true;
}

}  // namespace gpa
