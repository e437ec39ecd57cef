#include "gpa/oracle.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gpa/errors.hpp"

namespace gpa {

namespace {

const FiniteGroupTable& table_of(const ProductGraph& g, int v) {
  if (v < 0 || v >= g.size())
    throw InputError("syllable references vertex index " + std::to_string(v) +
                     " outside the graph");
  const auto& t = g.vertex(v).table;
  if (!t)
    throw InputError("vertex '" + g.vertex(v).name +
                     "' has no multiplication table; the oracle needs "
                     "concrete finite vertex groups");
  return *t;
}

void check_word(const ProductGraph& g, const std::vector<Syllable>& word) {
  for (const auto& s : word) {
    const auto& t = table_of(g, s.vertex);
    if (s.element < 0 || s.element >= t.size())
      throw InputError("syllable element index " + std::to_string(s.element) +
                       " out of range for vertex '" +
                       g.vertex(s.vertex).name + "'");
  }
}

// All non-identity elements of the vertex groups of s: the oracle's
// generating set, in (vertex, element) order.
std::vector<Syllable> generating_set(const ProductGraph& g,
                                     const SubgraphRef& s) {
  std::vector<Syllable> gens;
  for (int v : s.verts) {
    const auto& t = table_of(g, v);
    for (int e = 1; e < t.size(); ++e) gens.push_back({v, e});
  }
  return gens;
}

struct NfHash {
  std::size_t operator()(const NormalForm& w) const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& s : w) {
      h = (h ^ static_cast<std::size_t>(s.vertex)) * 1099511628211ull;
      h = (h ^ static_cast<std::size_t>(s.element)) * 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

NormalForm reduce(const ProductGraph& g, const std::vector<Syllable>& word) {
  check_word(g, word);
  NormalForm w;
  for (const auto& s : word)
    if (s.element != 0) w.push_back(s);

  // Merge to a fixpoint: two same-vertex syllables combine whenever every
  // syllable between them commutes with their vertex.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < w.size() && !changed; ++i) {
      const int v = w[i].vertex;
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[j].vertex == v) {
          const int merged = table_of(g, v).mul(w[i].element, w[j].element);
          w.erase(w.begin() + j);
          if (merged == 0)
            w.erase(w.begin() + i);
          else
            w[i].element = merged;
          changed = true;
          break;
        }
        if (!g.adjacent(w[j].vertex, v)) break;  // v is blocked past here
      }
    }
  }

  // Left-greedy canonicalization: repeatedly pull the least front-movable
  // syllable. Two same-vertex syllables are never both movable (the first
  // blocks the second), so the pick is unambiguous.
  NormalForm out;
  out.reserve(w.size());
  while (!w.empty()) {
    std::size_t best = 0;
    bool have = false;
    for (std::size_t k = 0; k < w.size(); ++k) {
      bool movable = true;
      for (std::size_t m = 0; m < k; ++m)
        if (!g.adjacent(w[m].vertex, w[k].vertex)) {
          movable = false;
          break;
        }
      if (movable && (!have || w[k] < w[best])) {
        best = k;
        have = true;
      }
    }
    out.push_back(w[best]);
    w.erase(w.begin() + best);
  }
  return out;
}

NormalForm multiply(const ProductGraph& g, const NormalForm& x,
                    const NormalForm& y) {
  std::vector<Syllable> cat = x;
  cat.insert(cat.end(), y.begin(), y.end());
  return reduce(g, cat);
}

NormalForm inverse_of(const ProductGraph& g, const NormalForm& x) {
  std::vector<Syllable> inv;
  inv.reserve(x.size());
  for (auto it = x.rbegin(); it != x.rend(); ++it)
    inv.push_back({it->vertex, table_of(g, it->vertex).inverse(it->element)});
  return reduce(g, inv);
}

SubgroupOrder subgroup_order(const ProductGraph& g, const SubgraphRef& s,
                             std::uint64_t bound) {
  if (bound < 1) throw InputError("subgroup order bound must be >= 1");
  const auto gens = generating_set(g, s);
  std::unordered_map<NormalForm, int, NfHash> seen;
  std::vector<NormalForm> frontier{NormalForm{}};
  seen.emplace(NormalForm{}, 0);
  while (!frontier.empty()) {
    std::vector<NormalForm> next;
    for (const auto& x : frontier) {
      for (const auto& gen : gens) {
        NormalForm y = multiply(g, x, NormalForm{gen});
        if (seen.emplace(y, 0).second) {
          if (seen.size() > bound) return {true, 0};
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return {false, seen.size()};
}

namespace {

CayleyBall finish_ball(const ProductGraph& g,
                       std::vector<NormalForm> elements,
                       std::vector<int> distance,
                       const std::vector<Syllable>& gens, bool closed) {
  CayleyBall ball;
  ball.elements = std::move(elements);
  ball.distance = std::move(distance);
  ball.closed = closed;

  std::unordered_map<NormalForm, int, NfHash> index;
  index.reserve(ball.elements.size() * 2);
  for (std::size_t i = 0; i < ball.elements.size(); ++i)
    index.emplace(ball.elements[i], static_cast<int>(i));

  const int n = static_cast<int>(ball.elements.size());
  std::vector<std::vector<std::pair<int, int>>> buckets;
#ifdef _OPENMP
  buckets.resize(omp_get_max_threads());
#else
  buckets.resize(1);
#endif
#pragma omp parallel for schedule(dynamic, 64)
  for (int i = 0; i < n; ++i) {
#ifdef _OPENMP
    auto& mine = buckets[omp_get_thread_num()];
#else
    auto& mine = buckets[0];
#endif
    for (const auto& gen : gens) {
      NormalForm y = multiply(g, ball.elements[i], NormalForm{gen});
      auto it = index.find(y);
      if (it != index.end() && it->second > i)
        mine.emplace_back(i, it->second);
    }
  }
  for (auto& b : buckets)
    ball.edges.insert(ball.edges.end(), b.begin(), b.end());
  std::sort(ball.edges.begin(), ball.edges.end());
  ball.edges.erase(std::unique(ball.edges.begin(), ball.edges.end()),
                   ball.edges.end());
  return ball;
}

}  // namespace

CayleyBall cayley_ball(const ProductGraph& g, int radius, std::size_t cap) {
  if (radius < 0) throw InputError("ball radius must be >= 0");
  const auto gens = generating_set(g, SubgraphRef::whole(g));

  std::vector<NormalForm> elements{NormalForm{}};
  std::vector<int> distance{0};
  std::unordered_map<NormalForm, int, NfHash> index;
  index.emplace(NormalForm{}, 0);

  std::size_t layer_begin = 0;
  bool closed = false;
  for (int d = 1; d <= radius; ++d) {
    const std::size_t layer_end = elements.size();
    std::vector<std::vector<NormalForm>> buckets;
#ifdef _OPENMP
    buckets.resize(omp_get_max_threads());
#else
    buckets.resize(1);
#endif
    // Parallel frontier expansion. The merge below sorts and deduplicates,
    // so the result does not depend on the thread schedule.
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = static_cast<long long>(layer_begin);
         i < static_cast<long long>(layer_end); ++i) {
#ifdef _OPENMP
      auto& mine = buckets[omp_get_thread_num()];
#else
      auto& mine = buckets[0];
#endif
      for (const auto& gen : gens) {
        NormalForm y = multiply(g, elements[i], NormalForm{gen});
        if (!index.count(y)) mine.push_back(std::move(y));
      }
    }
    std::vector<NormalForm> layer;
    for (auto& b : buckets)
      layer.insert(layer.end(), std::make_move_iterator(b.begin()),
                   std::make_move_iterator(b.end()));
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());

    if (layer.empty()) {
      closed = true;
      break;
    }
    if (elements.size() + layer.size() > cap)
      throw BoundExceededError("Cayley ball cap of " + std::to_string(cap) +
                               " elements exceeded at radius " +
                               std::to_string(d));
    layer_begin = layer_end;
    for (auto& y : layer) {
      index.emplace(y, static_cast<int>(elements.size()));
      elements.push_back(std::move(y));
      distance.push_back(d);
    }
  }
  if (!closed) {
    // Probe one layer past the radius: the ball is the whole group when the
    // final layer generates nothing new.
    closed = true;
    for (std::size_t i = layer_begin; i < elements.size() && closed; ++i)
      for (const auto& gen : gens)
        if (!index.count(multiply(g, elements[i], NormalForm{gen}))) {
          closed = false;
          break;
        }
  }
  return finish_ball(g, std::move(elements), std::move(distance), gens,
                     closed);
}

CayleyBall cayley_ball_serial(const ProductGraph& g, int radius,
                              std::size_t cap) {
  if (radius < 0) throw InputError("ball radius must be >= 0");
  const auto gens = generating_set(g, SubgraphRef::whole(g));

  std::vector<NormalForm> elements{NormalForm{}};
  std::vector<int> distance{0};
  std::map<NormalForm, int> index;
  index.emplace(NormalForm{}, 0);

  std::size_t layer_begin = 0;
  bool closed = false;
  for (int d = 1; d <= radius; ++d) {
    const std::size_t layer_end = elements.size();
    std::vector<NormalForm> layer;
    for (std::size_t i = layer_begin; i < layer_end; ++i)
      for (const auto& gen : gens) {
        NormalForm y = multiply(g, elements[i], NormalForm{gen});
        if (!index.count(y)) layer.push_back(std::move(y));
      }
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
    if (layer.empty()) {
      closed = true;
      break;
    }
    if (elements.size() + layer.size() > cap)
      throw BoundExceededError("Cayley ball cap of " + std::to_string(cap) +
                               " elements exceeded at radius " +
                               std::to_string(d));
    layer_begin = layer_end;
    for (auto& y : layer) {
      index.emplace(y, static_cast<int>(elements.size()));
      elements.push_back(std::move(y));
      distance.push_back(d);
    }
  }
  if (!closed) {
    closed = true;
    for (std::size_t i = layer_begin; i < elements.size() && closed; ++i)
      for (const auto& gen : gens)
        if (!index.count(multiply(g, elements[i], NormalForm{gen}))) {
          closed = false;
          break;
        }
  }

  CayleyBall ball;
  ball.elements = std::move(elements);
  ball.distance = std::move(distance);
  ball.closed = closed;
  for (std::size_t i = 0; i < ball.elements.size(); ++i)
    for (const auto& gen : gens) {
      NormalForm y = multiply(g, ball.elements[i], NormalForm{gen});
      auto it = index.find(y);
      if (it != index.end() && it->second > static_cast<int>(i))
        ball.edges.emplace_back(static_cast<int>(i), it->second);
    }
  std::sort(ball.edges.begin(), ball.edges.end());
  ball.edges.erase(std::unique(ball.edges.begin(), ball.edges.end()),
                   ball.edges.end());
  return ball;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

EndsEstimateResult estimate_ends(const ProductGraph& g, int inner, int outer,
                                 int stability, std::size_t cap) {
  if (inner < 0 || inner >= outer)
    throw InputError("ends estimation requires 0 <= inner < outer");
  if (stability < 1 || stability > outer - inner)
    throw InputError("ends estimation requires 1 <= stability <= outer-inner");

  CayleyBall ball = cayley_ball(g, outer, cap);
  EndsEstimateResult out;
  if (ball.closed) {
    out.verdict = EndsEstimate::Zero;
    out.order = ball.elements.size();
    return out;
  }

  const int n = static_cast<int>(ball.elements.size());
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : ball.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  for (int r = inner + 1; r <= outer; ++r) {
    UnionFind uf(n);
    std::vector<char> in_annulus(n, 0);
    for (int i = 0; i < n; ++i)
      in_annulus[i] = ball.distance[i] > inner && ball.distance[i] <= r;
    for (int i = 0; i < n; ++i)
      if (in_annulus[i])
        for (int j : adj[i])
          if (in_annulus[j]) uf.unite(i, j);
    std::vector<int> sphere_roots;
    for (int i = 0; i < n; ++i)
      if (ball.distance[i] == r) sphere_roots.push_back(uf.find(i));
    std::sort(sphere_roots.begin(), sphere_roots.end());
    sphere_roots.erase(
        std::unique(sphere_roots.begin(), sphere_roots.end()),
        sphere_roots.end());
    out.component_counts.push_back(static_cast<int>(sphere_roots.size()));
  }

  const auto& counts = out.component_counts;
  const int last = counts.back();
  bool stable = true;
  for (int i = 0; i < stability; ++i)
    if (counts[counts.size() - 1 - i] != last) stable = false;
  if (!stable) {
    out.verdict = EndsEstimate::Inconclusive;
    return out;
  }
  out.verdict = last == 1   ? EndsEstimate::One
                : last == 2 ? EndsEstimate::Two
                            : EndsEstimate::Many;
  return out;
}

}  // namespace gpa
