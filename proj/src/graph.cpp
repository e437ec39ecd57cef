#include "gpa/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gpa/errors.hpp"

namespace gpa {

bool VertexGroupInfo::operator==(const VertexGroupInfo& o) const {
  if (name != o.name || order != o.order || ends != o.ends ||
      semistable != o.semistable ||
      finitely_presented != o.finitely_presented ||
      presentation != o.presentation)
    return false;
  if (static_cast<bool>(table) != static_cast<bool>(o.table)) return false;
  return !table || *table == *o.table;
}

ProductGraph::ProductGraph(
    std::vector<VertexGroupInfo> vertices,
    const std::vector<std::pair<std::string, std::string>>& edges)
    : vertices_(std::move(vertices)), raw_edges_(edges) {
  const int n = size();
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) index.emplace(vertices_[i].name, i);

  matrix_.assign(static_cast<std::size_t>(n) * n, 0);
  std::set<std::pair<int, int>> resolved;
  for (const auto& [a, b] : raw_edges_) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end())
      throw InputError("edge endpoint '" + a + "' names no vertex");
    if (ib == index.end())
      throw InputError("edge endpoint '" + b + "' names no vertex");
    int u = ia->second, v = ib->second;
    if (u == v) continue;  // self-loop: kept in raw_edges_ for validation
    resolved.emplace(std::min(u, v), std::max(u, v));
  }
  edges_.assign(resolved.begin(), resolved.end());
  adj_.assign(n, {});
  for (auto [u, v] : edges_) {
    matrix_[u * n + v] = matrix_[v * n + u] = 1;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

std::optional<int> ProductGraph::find_vertex(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (vertices_[i].name == name) return i;
  return std::nullopt;
}

int ProductGraph::require_vertex(std::string_view name) const {
  auto i = find_vertex(name);
  if (!i) throw InputError("unknown vertex '" + std::string(name) + "'");
  return *i;
}

SubgraphRef::SubgraphRef(std::vector<int> v) : verts(std::move(v)) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
}

SubgraphRef SubgraphRef::from_names(const ProductGraph& g,
                                    const std::vector<std::string>& names) {
  std::vector<int> v;
  v.reserve(names.size());
  for (const auto& n : names) v.push_back(g.require_vertex(n));
  return SubgraphRef(std::move(v));
}

SubgraphRef SubgraphRef::whole(const ProductGraph& g) {
  std::vector<int> v(g.size());
  for (int i = 0; i < g.size(); ++i) v[i] = i;
  return SubgraphRef(std::move(v));
}

SubgraphRef SubgraphRef::from_mask(std::uint64_t mask) {
  std::vector<int> v;
  for (int i = 0; i < 64; ++i)
    if (mask >> i & 1) v.push_back(i);
  return SubgraphRef(std::move(v));
}

bool SubgraphRef::contains(int v) const {
  return std::binary_search(verts.begin(), verts.end(), v);
}

std::uint64_t SubgraphRef::mask() const {
  std::uint64_t m = 0;
  for (int v : verts) m |= std::uint64_t{1} << v;
  return m;
}

std::vector<std::string> SubgraphRef::names(const ProductGraph& g) const {
  std::vector<std::string> out;
  out.reserve(verts.size());
  for (int v : verts) out.push_back(g.vertex(v).name);
  return out;
}

SubgraphRef set_union(const SubgraphRef& a, const SubgraphRef& b) {
  std::vector<int> v;
  std::set_union(a.verts.begin(), a.verts.end(), b.verts.begin(),
                 b.verts.end(), std::back_inserter(v));
  return SubgraphRef(std::move(v));
}

SubgraphRef set_intersection(const SubgraphRef& a, const SubgraphRef& b) {
  std::vector<int> v;
  std::set_intersection(a.verts.begin(), a.verts.end(), b.verts.begin(),
                        b.verts.end(), std::back_inserter(v));
  return SubgraphRef(std::move(v));
}

SubgraphRef set_difference(const SubgraphRef& a, const SubgraphRef& b) {
  std::vector<int> v;
  std::set_difference(a.verts.begin(), a.verts.end(), b.verts.begin(),
                      b.verts.end(), std::back_inserter(v));
  return SubgraphRef(std::move(v));
}

std::vector<Violation> validate_graph(const ProductGraph& g) {
  std::vector<Violation> out;
  auto add = [&](std::string code, std::string detail) {
    out.push_back({std::move(code), std::move(detail)});
  };

  std::set<std::string> names;
  for (const auto& v : g.vertices())
    if (!names.insert(v.name).second)
      add("duplicate-vertex-name", "vertex name '" + v.name + "' is not unique");

  std::set<std::pair<std::string, std::string>> seen_edges;
  for (const auto& [a, b] : g.raw_edges()) {
    if (a == b) {
      add("self-loop", "self-loop at vertex '" + a + "'");
      continue;
    }
    auto key = std::minmax(a, b);
    if (!seen_edges.insert(key).second)
      add("duplicate-edge", "duplicate edge {" + a + "," + b + "}");
  }

  for (const auto& v : g.vertices()) {
    if (v.order.is_finite() && *v.order.value < 1)
      add("order-zero", "vertex '" + v.name + "' has order 0");
    if (v.order == GroupOrder::finite(1))
      add("trivial-vertex-group",
          "vertex '" + v.name +
              "' has the trivial group; vertex groups must be non-trivial "
              "(delete the vertex instead)");
    if (v.order.is_finite() && v.ends != VertexEnds::Zero)
      add("finite-ends",
          "vertex '" + v.name + "' is finite, so it must have zero ends");
    if (!v.order.is_finite() && v.ends == VertexEnds::Zero)
      add("finite-ends",
          "vertex '" + v.name + "' has zero ends, so it must be finite");
    if (v.order.is_finite() && v.semistable != Tri::Yes)
      add("finite-semistable",
          "vertex '" + v.name + "' is finite, so it must be semistable");
    if (v.order.is_finite() && !v.finitely_presented)
      add("finite-fp",
          "vertex '" + v.name + "' is finite, so it is finitely presented");
    if (v.table) {
      if (!v.order.is_finite() ||
          *v.order.value != static_cast<std::uint64_t>(v.table->size()))
        add("table-order",
            "vertex '" + v.name + "' has a table of size " +
                std::to_string(v.table->size()) +
                " that disagrees with its declared order");
    }
    if (v.presentation) {
      if (!v.finitely_presented)
        add("presentation-fp",
            "vertex '" + v.name +
                "' carries a presentation but is flagged not finitely "
                "presented");
      std::set<std::string> syms;
      for (const auto& s : v.presentation->generators)
        if (!syms.insert(s).second)
          add("presentation-symbols",
              "vertex '" + v.name + "' repeats generator symbol '" + s + "'");
      for (const auto& w : v.presentation->relators)
        for (const auto& l : w)
          if (l.gen < 0 ||
              l.gen >= static_cast<int>(v.presentation->generators.size()))
            add("presentation-relator",
                "vertex '" + v.name +
                    "' has a relator letter outside its generator list");
    }
  }
  return out;
}

ProductGraph full_subgraph(const ProductGraph& g, const SubgraphRef& s) {
  std::vector<VertexGroupInfo> vs;
  vs.reserve(s.verts.size());
  for (int v : s.verts) vs.push_back(g.vertex(v));
  std::vector<std::pair<std::string, std::string>> es;
  for (std::size_t i = 0; i < s.verts.size(); ++i)
    for (std::size_t j = i + 1; j < s.verts.size(); ++j)
      if (g.adjacent(s.verts[i], s.verts[j]))
        es.emplace_back(g.vertex(s.verts[i]).name, g.vertex(s.verts[j]).name);
  return ProductGraph(std::move(vs), es);
}

SubgraphRef link(const ProductGraph& g, int v) {
  return SubgraphRef(g.neighbors(v));
}

SubgraphRef star(const ProductGraph& g, int v) {
  auto s = g.neighbors(v);
  s.push_back(v);
  return SubgraphRef(std::move(s));
}

SubgraphRef link(const ProductGraph& g, std::string_view name) {
  return link(g, g.require_vertex(name));
}

SubgraphRef star(const ProductGraph& g, std::string_view name) {
  return star(g, g.require_vertex(name));
}

bool is_complete(const ProductGraph& g, const SubgraphRef& s) {
  for (std::size_t i = 0; i < s.verts.size(); ++i)
    for (std::size_t j = i + 1; j < s.verts.size(); ++j)
      if (!g.adjacent(s.verts[i], s.verts[j])) return false;
  return true;
}

Tri spans_finite_subgroup(const ProductGraph& g, const SubgraphRef& s) {
  for (int v : s.verts)
    if (!g.vertex(v).order.is_finite()) return Tri::No;
  return is_complete(g, s) ? Tri::Yes : Tri::No;
}

std::vector<std::vector<int>> components_within(const ProductGraph& g,
                                                const SubgraphRef& s) {
  std::vector<std::vector<int>> comps;
  std::set<int> todo(s.verts.begin(), s.verts.end());
  while (!todo.empty()) {
    std::vector<int> comp, stack{*todo.begin()};
    todo.erase(todo.begin());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : g.neighbors(v)) {
        auto it = todo.find(u);
        if (it != todo.end()) {
          todo.erase(it);
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

std::vector<std::vector<int>> components(const ProductGraph& g) {
  return components_within(g, SubgraphRef::whole(g));
}

namespace {

// Enumerates candidate separator subsets in (size, lexicographic) order and
// calls fn for each complete all-finite subset that leaves >= 2 components;
// fn returning false stops the walk.
template <typename Fn>
void walk_separators(const ProductGraph& g, int max_vertices, Fn&& fn) {
  const int n = g.size();
  if (n > max_vertices)
    throw BoundExceededError(
        "separator enumeration bound exceeded: graph has " +
        std::to_string(n) + " vertices, bound is " +
        std::to_string(max_vertices) + " (set GPA_MAX_VERTICES to raise)");

  std::vector<int> candidates;  // finite vertex groups only
  for (int v = 0; v < n; ++v)
    if (g.vertex(v).order.is_finite()) candidates.push_back(v);
  const int m = static_cast<int>(candidates.size());

  std::vector<int> pick;
  // Recursive lexicographic walk over subsets of `candidates` of fixed size,
  // pruning on completeness as the subset grows.
  auto rec = [&](auto&& self, int start, int remaining) -> bool {
    if (remaining == 0) {
      SubgraphRef delta{std::vector<int>(pick.begin(), pick.end())};
      SubgraphRef rest = set_difference(SubgraphRef::whole(g), delta);
      auto parts = components_within(g, rest);
      if (parts.size() >= 2) {
        if (!fn(Separator{std::move(delta), std::move(parts), false}))
          return false;
      }
      return true;
    }
    for (int i = start; i <= m - remaining; ++i) {
      int v = candidates[i];
      bool complete = true;
      for (int u : pick)
        if (!g.adjacent(u, v)) {
          complete = false;
          break;
        }
      if (!complete) continue;
      pick.push_back(v);
      bool keep = self(self, i + 1, remaining - 1);
      pick.pop_back();
      if (!keep) return false;
    }
    return true;
  };
  for (int size = 0; size <= m; ++size)
    if (!rec(rec, 0, size)) return;
}

}  // namespace

std::vector<Separator> find_finite_complete_separators(const ProductGraph& g,
                                                       int max_vertices) {
  std::vector<Separator> out;
  walk_separators(g, max_vertices, [&](Separator s) {
    out.push_back(std::move(s));
    return true;
  });
  // A separator is minimal when no strictly smaller returned set is
  // contained in it. Subsets of a complete all-finite set stay complete and
  // all-finite, so containment among returned separators is the whole story.
  for (auto& s : out) {
    s.minimal = true;
    for (const auto& t : out) {
      if (t.delta.verts.size() >= s.delta.verts.size()) continue;
      if (std::includes(s.delta.verts.begin(), s.delta.verts.end(),
                        t.delta.verts.begin(), t.delta.verts.end())) {
        s.minimal = false;
        break;
      }
    }
  }
  return out;
}

std::optional<Separator> first_finite_complete_separator(const ProductGraph& g,
                                                         int max_vertices) {
  std::optional<Separator> found;
  walk_separators(g, max_vertices, [&](Separator s) {
    found = std::move(s);
    return false;
  });
  if (found) found->minimal = true;
  return found;
}

}  // namespace gpa
