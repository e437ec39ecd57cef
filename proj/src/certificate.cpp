#include "gpa/certificate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gpa/errors.hpp"
#include "gpa/presentation.hpp"

namespace gpa {

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::LeafVertex: return "leaf_vertex";
    case Rule::Product: return "product";
    case Rule::FiniteIndex: return "finite_index";
    case Rule::AmalgamSS: return "amalgam_ss";
    case Rule::UnionMM: return "union_mm";
    case Rule::SplitNonSS: return "split_non_ss";
  }
  return "?";
}

namespace {

std::string verdict_name(Verdict v) {
  return v == Verdict::Semistable ? "semistable" : "not_semistable";
}

std::string set_names(const ProductGraph& g, const SubgraphRef& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.verts.size(); ++i) {
    if (i) out += ",";
    out += g.vertex(s.verts[i]).name;
  }
  return out + "}";
}

int expected_children(Rule r) {
  switch (r) {
    case Rule::LeafVertex:
    case Rule::Product: return 0;
    case Rule::FiniteIndex:
    case Rule::SplitNonSS: return 1;
    case Rule::AmalgamSS:
    case Rule::UnionMM: return 2;
  }
  return 0;
}

class Checker {
 public:
  Checker(const ProductGraph& g) : g_(g), an_(g) {}

  CheckReport run(const Certificate& c) {
    CheckReport report;
    report.accepted = check(c, "root");
    report.first_violation = std::move(viol_);
    return report;
  }

 private:
  const ProductGraph& g_;
  Analyzer an_;
  std::optional<CheckViolation> viol_;

  bool reject(const Certificate& c, const std::string& path,
              const std::string& condition, const std::string& explanation) {
    viol_ = CheckViolation{path, rule_name(c.rule), condition, explanation};
    return false;
  }

  void require_valid_ref(const SubgraphRef& s) const {
    for (int v : s.verts)
      if (v < 0 || v >= g_.size())
        throw InputError("certificate references vertex index " +
                         std::to_string(v) + " outside the graph");
  }

  bool all_cross_adjacent(const SubgraphRef& a, const SubgraphRef& b) const {
    for (int u : a.verts)
      for (int v : b.verts)
        if (!g_.adjacent(u, v)) return false;
    return true;
  }

  bool all_finitely_presented(const SubgraphRef& s) const {
    for (int v : s.verts)
      if (!g_.vertex(v).finitely_presented) return false;
    return true;
  }

  // True when no edge of g joins A - C to B - C (the visual splitting
  // condition of a separating subgraph C = A intersect B).
  bool separates(const SubgraphRef& a, const SubgraphRef& b,
                 const SubgraphRef& c) const {
    SubgraphRef a_only = set_difference(a, c);
    SubgraphRef b_only = set_difference(b, c);
    for (int u : a_only.verts)
      for (int v : b_only.verts)
        if (g_.adjacent(u, v)) return false;
    return true;
  }

  bool check(const Certificate& c, const std::string& path) {
    require_valid_ref(c.subject);
    require_valid_ref(c.part_a);
    require_valid_ref(c.part_b);
    require_valid_ref(c.part_c);
    if (c.rule == Rule::LeafVertex &&
        (c.leaf_vertex < 0 || c.leaf_vertex >= g_.size()))
      throw InputError("certificate leaf references vertex index " +
                       std::to_string(c.leaf_vertex) + " outside the graph");

    if (static_cast<int>(c.children.size()) != expected_children(c.rule))
      return reject(c, path, "children-count",
                    rule_name(c.rule) + " expects " +
                        std::to_string(expected_children(c.rule)) +
                        " children, has " + std::to_string(c.children.size()));

    switch (c.rule) {
      case Rule::LeafVertex: {
        if (c.subject.verts != std::vector<int>{c.leaf_vertex})
          return reject(c, path, "leaf-subject",
                        "subject must be exactly the leaf vertex");
        Tri flag = g_.vertex(c.leaf_vertex).semistable;
        if (flag == Tri::Unknown)
          return reject(c, path, "leaf-annotation",
                        "vertex '" + g_.vertex(c.leaf_vertex).name +
                            "' has unknown semistability");
        Verdict expected =
            flag == Tri::Yes ? Verdict::Semistable : Verdict::NotSemistable;
        if (c.verdict != expected)
          return reject(c, path, "leaf-verdict",
                        "verdict contradicts the vertex annotation");
        return true;
      }

      case Rule::Product: {
        if (c.verdict != Verdict::Semistable)
          return reject(c, path, "product-verdict",
                        "product rule only certifies semistable");
        if (c.part_a.empty() || c.part_b.empty())
          return reject(c, path, "product-factors",
                        "both factors must be nonempty");
        if (!set_intersection(c.part_a, c.part_b).empty())
          return reject(c, path, "product-disjoint",
                        "factors must be disjoint");
        if (set_union(c.part_a, c.part_b) != c.subject)
          return reject(c, path, "product-cover",
                        "factors must partition the subject");
        if (!all_cross_adjacent(c.part_a, c.part_b))
          return reject(c, path, "product-adjacency",
                        "every factor1-factor2 pair must be adjacent");
        if (an_.spans_finite(c.part_a) != Tri::No)
          return reject(c, path, "product-infinite",
                        "factor1 " + set_names(g_, c.part_a) +
                            " spans a finite subgroup");
        if (an_.spans_finite(c.part_b) != Tri::No)
          return reject(c, path, "product-infinite",
                        "factor2 " + set_names(g_, c.part_b) +
                            " spans a finite subgroup");
        if (!all_finitely_presented(c.subject))
          return reject(c, path, "product-fp",
                        "both factors must be finitely presented");
        return true;
      }

      case Rule::FiniteIndex: {
        if (!set_intersection(c.part_a, c.part_b).empty())
          return reject(c, path, "finite-index-disjoint",
                        "core and finite partner must be disjoint");
        if (set_union(c.part_a, c.part_b) != c.subject)
          return reject(c, path, "finite-index-cover",
                        "core and finite partner must partition the subject");
        if (!all_cross_adjacent(c.part_a, c.part_b))
          return reject(c, path, "finite-index-adjacency",
                        "every core-partner pair must be adjacent");
        if (an_.spans_finite(c.part_b) != Tri::Yes)
          return reject(c, path, "finite-index-partner",
                        "finite partner " + set_names(g_, c.part_b) +
                            " does not span a finite subgroup");
        if (!all_finitely_presented(c.part_a))
          return reject(c, path, "finite-index-fp",
                        "core must be finitely presented");
        const Certificate& child = c.children[0];
        if (child.subject != c.part_a)
          return reject(c, path, "finite-index-child",
                        "child must certify the core");
        if (child.verdict != c.verdict)
          return reject(c, path, "finite-index-transfer",
                        "verdict must equal the child verdict");
        return check(child, path + ".0");
      }

      case Rule::AmalgamSS: {
        if (c.verdict != Verdict::Semistable)
          return reject(c, path, "amalgam-verdict",
                        "amalgam rule only certifies semistable");
        if (c.part_a.empty() || c.part_b.empty())
          return reject(c, path, "amalgam-sides",
                        "both sides must be nonempty");
        if (set_union(c.part_a, c.part_b) != c.subject)
          return reject(c, path, "amalgam-cover",
                        "sides must cover the subject");
        if (set_intersection(c.part_a, c.part_b) != c.part_c)
          return reject(c, path, "amalgam-intersection",
                        "C must equal the intersection of the sides");
        if (!separates(c.part_a, c.part_b, c.part_c))
          return reject(c, path, "amalgam-separation",
                        "an edge joins A-C to B-C: not a visual splitting");
        if (!all_finitely_presented(c.subject))
          return reject(c, path, "amalgam-fp",
                        "sides must be finitely presented");
        for (int i = 0; i < 2; ++i) {
          const Certificate& child = c.children[i];
          if (child.subject != (i == 0 ? c.part_a : c.part_b))
            return reject(c, path, "amalgam-child",
                          "child " + std::to_string(i) +
                              " must certify side " + (i == 0 ? "A" : "B"));
          if (child.verdict != Verdict::Semistable)
            return reject(c, path, "amalgam-child-verdict",
                          "both sides must be certified semistable");
        }
        return check(c.children[0], path + ".0") &&
               check(c.children[1], path + ".1");
      }

      case Rule::UnionMM: {
        if (c.verdict != Verdict::Semistable)
          return reject(c, path, "union-verdict",
                        "union rule only certifies semistable");
        if (set_union(c.part_a, c.part_b) != c.subject)
          return reject(c, path, "union-cover",
                        "A and B must cover the subject");
        // Proper subsets keep the checker independent of the classifier on
        // the subject itself.
        if (c.part_a == c.subject || c.part_b == c.subject)
          return reject(c, path, "union-proper",
                        "A and B must be proper subsets of the subject");
        if (an_.spans_finite(set_intersection(c.part_a, c.part_b)) != Tri::No)
          return reject(c, path, "union-overlap",
                        "A intersect B must span an infinite subgroup");
        if (an_.one_ended_and_semistable(c.part_a) != Tri::Yes)
          return reject(c, path, "union-side",
                        "side A " + set_names(g_, c.part_a) +
                            " is not certified one-ended and semistable by "
                            "the analytic criteria");
        if (an_.one_ended_and_semistable(c.part_b) != Tri::Yes)
          return reject(c, path, "union-side",
                        "side B " + set_names(g_, c.part_b) +
                            " is not certified one-ended and semistable by "
                            "the analytic criteria");
        for (int i = 0; i < 2; ++i) {
          const Certificate& child = c.children[i];
          if (child.subject != (i == 0 ? c.part_a : c.part_b))
            return reject(c, path, "union-child",
                          "child " + std::to_string(i) +
                              " must certify side " + (i == 0 ? "A" : "B"));
          if (child.verdict != Verdict::Semistable)
            return reject(c, path, "union-child-verdict",
                          "both sides must be certified semistable");
        }
        return check(c.children[0], path + ".0") &&
               check(c.children[1], path + ".1");
      }

      case Rule::SplitNonSS: {
        if (c.verdict != Verdict::NotSemistable)
          return reject(c, path, "split-verdict",
                        "splitting rule only certifies not semistable");
        if (c.part_a.empty() || c.part_b.empty())
          return reject(c, path, "split-sides",
                        "both sides must be nonempty");
        if (set_union(c.part_a, c.part_b) != c.subject)
          return reject(c, path, "split-cover",
                        "sides must cover the subject");
        if (set_intersection(c.part_a, c.part_b) != c.part_c)
          return reject(c, path, "split-intersection",
                        "C must equal the intersection of the sides");
        if (!separates(c.part_a, c.part_b, c.part_c))
          return reject(c, path, "split-separation",
                        "an edge joins A-C to B-C: not a visual splitting");
        if (an_.spans_finite(c.part_c) != Tri::Yes)
          return reject(c, path, "split-finite",
                        "C " + set_names(g_, c.part_c) +
                            " must span a finite subgroup");
        if (!all_finitely_presented(c.subject))
          return reject(c, path, "split-fp",
                        "sides must be finitely presented");
        const Certificate& child = c.children[0];
        if (child.subject != c.part_a)
          return reject(c, path, "split-child",
                        "child must certify side A");
        if (child.verdict != Verdict::NotSemistable)
          return reject(c, path, "split-child-verdict",
                        "side A must be certified not semistable");
        return check(child, path + ".0");
      }
    }
    return reject(c, path, "rule", "unrecognized rule");
  }
};

}  // namespace

CheckReport check_certificate(const ProductGraph& g, const Certificate& c) {
  return Checker(g).run(c);
}

namespace {

// Deterministic certificate generation mirroring the combination strategy:
// N1 splits off the star of the first definite bad vertex; S1 is a leaf; S2
// handles graphs that equal a star; S3 peels the lowest vertex of an
// all-semistable graph; S4 grows a union of stars around the non-semistable
// vertices until the remainder is clean. A bounded move search backs up the
// strategy, with the checker holding final authority.
class Builder {
 public:
  Builder(const ProductGraph& g, int separator_bound)
      : g_(g), an_(g, separator_bound) {}

  Certificate build(const SubgraphRef& s) {
    if (s.empty())
      throw InputError(
          "the empty graph (trivial group) has no certificate: leaves are "
          "vertices");
    SemistabilityVerdict v = an_.semistability(s);
    if (v.kind == SsClass::Unknown)
      throw UnknownVerdictError(
          "cannot certify: semistability verdict is unknown (vertex '" +
          g_.vertex(v.bad.potential.front()).name +
          "' has unknown status and a finite complete link)");
    Verdict want = v.kind == SsClass::Semistable ? Verdict::Semistable
                                                 : Verdict::NotSemistable;
    Certificate c = assemble(s);
    if (c.verdict == want && check_certificate(g_, c).accepted) return c;
    auto found = search(s, want);
    if (found) return *found;
    throw BoundExceededError("certificate search exhausted for subject " +
                             set_names(g_, s));
  }

 private:
  const ProductGraph& g_;
  Analyzer an_;
  std::map<std::pair<std::vector<int>, Verdict>, std::optional<Certificate>>
      search_memo_;

  SubgraphRef link_within(const SubgraphRef& s, int v) const {
    return set_intersection(link(g_, v), s);
  }
  SubgraphRef star_within(const SubgraphRef& s, int v) const {
    SubgraphRef st = link_within(s, v);
    st = set_union(st, SubgraphRef({v}));
    return st;
  }

  Certificate leaf(int v) {
    Certificate c;
    c.rule = Rule::LeafVertex;
    c.subject = SubgraphRef({v});
    c.leaf_vertex = v;
    c.verdict = g_.vertex(v).semistable == Tri::Yes ? Verdict::Semistable
                                                    : Verdict::NotSemistable;
    return c;
  }

  Certificate finite_index(SubgraphRef subject, SubgraphRef core,
                           SubgraphRef partner, Certificate child) {
    Certificate c;
    c.rule = Rule::FiniteIndex;
    c.subject = std::move(subject);
    c.part_a = std::move(core);
    c.part_b = std::move(partner);
    c.verdict = child.verdict;
    c.children.push_back(std::move(child));
    return c;
  }

  // Product({w}, lk(w)) certifying the star of w; requires G_w infinite and
  // an infinite link span.
  Certificate product_star(const SubgraphRef& s, int w) {
    Certificate c;
    c.rule = Rule::Product;
    c.part_a = SubgraphRef({w});
    c.part_b = link_within(s, w);
    c.subject = star_within(s, w);
    c.verdict = Verdict::Semistable;
    return c;
  }

  Certificate amalgam(SubgraphRef subject, SubgraphRef a, SubgraphRef b,
                      SubgraphRef cc, Certificate child_a,
                      Certificate child_b) {
    Certificate c;
    c.rule = Rule::AmalgamSS;
    c.subject = std::move(subject);
    c.part_a = std::move(a);
    c.part_b = std::move(b);
    c.part_c = std::move(cc);
    c.verdict = Verdict::Semistable;
    c.children.push_back(std::move(child_a));
    c.children.push_back(std::move(child_b));
    return c;
  }

  Certificate split_non_ss(SubgraphRef subject, SubgraphRef a, SubgraphRef b,
                           SubgraphRef cc, Certificate child_a) {
    Certificate c;
    c.rule = Rule::SplitNonSS;
    c.subject = std::move(subject);
    c.part_a = std::move(a);
    c.part_b = std::move(b);
    c.part_c = std::move(cc);
    c.verdict = Verdict::NotSemistable;
    c.children.push_back(std::move(child_a));
    return c;
  }

  Certificate union_mm(SubgraphRef a, SubgraphRef b, Certificate child_a,
                       Certificate child_b) {
    Certificate c;
    c.rule = Rule::UnionMM;
    c.subject = set_union(a, b);
    c.part_a = std::move(a);
    c.part_b = std::move(b);
    c.verdict = Verdict::Semistable;
    c.children.push_back(std::move(child_a));
    c.children.push_back(std::move(child_b));
    return c;
  }

  // Componentwise wrapper: free-product splittings over C = {} reduce the
  // disconnected case to connected pieces.
  Certificate assemble(const SubgraphRef& s) {
    auto comps = components_within(g_, s);
    if (comps.size() == 1) return assemble_connected(s);
    for (const auto& comp : comps) {
      SubgraphRef a{comp};
      if (an_.semistability(a).kind == SsClass::NotSemistable)
        return split_non_ss(s, a, set_difference(s, a), SubgraphRef{},
                            assemble(a));
    }
    SubgraphRef a{comps.front()};
    SubgraphRef rest = set_difference(s, a);
    return amalgam(s, a, rest, SubgraphRef{}, assemble(a), assemble(rest));
  }

  Certificate assemble_connected(const SubgraphRef& s) {
    SemistabilityVerdict v = an_.semistability(s);

    if (s.size() == 1) return leaf(s.verts.front());

    if (v.kind == SsClass::NotSemistable) {
      const int bad = v.bad.definite.front();
      SubgraphRef lk = link_within(s, bad);
      SubgraphRef st = star_within(s, bad);
      Certificate core =
          finite_index(st, SubgraphRef({bad}), lk, leaf(bad));
      if (st == s) return core;
      return split_non_ss(s, st, set_difference(s, SubgraphRef({bad})), lk,
                          std::move(core));
    }

    // S2: the graph is the star of some vertex; take the lowest center.
    for (int w : s.verts) {
      if (star_within(s, w) != s) continue;
      SubgraphRef lk = link_within(s, w);
      bool w_infinite = !g_.vertex(w).order.is_finite();
      Tri lk_finite = an_.spans_finite(lk);
      if (w_infinite && lk_finite == Tri::No) return product_star(s, w);
      if (lk_finite == Tri::Yes)
        return finite_index(s, SubgraphRef({w}), lk, leaf(w));
      return finite_index(s, lk, SubgraphRef({w}), assemble(lk));
    }

    bool all_semistable = true;
    for (int v2 : s.verts)
      if (g_.vertex(v2).semistable != Tri::Yes) all_semistable = false;

    if (all_semistable) {
      // S3: peel the lowest vertex.
      const int v3 = s.verts.front();
      SubgraphRef st = star_within(s, v3);
      SubgraphRef rest = set_difference(s, SubgraphRef({v3}));
      return amalgam(s, rest, st, link_within(s, v3), assemble(rest),
                     assemble(st));
    }
    return union_strategy(s);
  }

  // S4: grow W over the non-semistable vertices, certifying U = st(W) as a
  // chain of unions of product-certified stars, until the complement is
  // clean; then split the subject along the boundary of W.
  Certificate union_strategy(const SubgraphRef& s) {
    SubgraphRef w_set;  // insertion handled below; w_set stays sorted
    std::optional<Certificate> cert_u;
    SubgraphRef u;

    auto add_star = [&](int w) {
      SubgraphRef stw = star_within(s, w);
      SubgraphRef new_u = set_union(u, stw);
      if (new_u == u) return;        // star already covered
      if (new_u == stw) {            // star swallows everything so far
        cert_u = product_star(s, w);
      } else {
        cert_u = union_mm(u, stw, std::move(*cert_u), product_star(s, w));
      }
      u = std::move(new_u);
    };

    while (true) {
      SubgraphRef rest = set_difference(s, w_set);
      if (!w_set.empty()) {
        if (rest.empty()) break;
        SemistabilityVerdict rv = an_.semistability(rest);
        if (rv.kind == SsClass::Semistable) break;
      }
      std::optional<int> pick;
      for (int cand : s.verts) {
        if (g_.vertex(cand).semistable == Tri::Yes) continue;
        if (w_set.contains(cand)) continue;
        if (!w_set.empty()) {
          bool touches = false;
          for (int w : w_set.verts)
            if (g_.adjacent(cand, w)) touches = true;
          if (!touches) continue;
        }
        pick = cand;
        break;
      }
      if (!pick)
        throw BoundExceededError(
            "union strategy ran out of candidates for subject " +
            set_names(g_, s));
      add_star(*pick);
      w_set = set_union(w_set, SubgraphRef({*pick}));
    }

    if (u == s) return *cert_u;
    SubgraphRef rest = set_difference(s, w_set);
    SubgraphRef boundary = set_difference(u, w_set);
    return amalgam(s, rest, u, boundary, assemble(rest), std::move(*cert_u));
  }

  // Bounded fallback: tries every strategy move at every position, checker
  // has final authority. Recursions strictly shrink the subject, so depth is
  // bounded by the vertex count.
  std::optional<Certificate> search(const SubgraphRef& s, Verdict want) {
    auto key = std::make_pair(s.verts, want);
    auto it = search_memo_.find(key);
    if (it != search_memo_.end()) return it->second;
    search_memo_[key] = std::nullopt;  // cut cycles defensively
    std::optional<Certificate> found = search_impl(s, want);
    search_memo_[key] = found;
    return found;
  }

  std::optional<Certificate> search_impl(const SubgraphRef& s, Verdict want) {
    if (s.empty()) return std::nullopt;
    auto accepted = [&](Certificate c) -> std::optional<Certificate> {
      if (c.verdict == want && check_certificate(g_, c).accepted)
        return std::optional<Certificate>(std::move(c));
      return std::nullopt;
    };

    if (s.size() == 1) return accepted(leaf(s.verts.front()));

    auto comps = components_within(g_, s);
    if (comps.size() > 1) {
      if (want == Verdict::NotSemistable) {
        for (const auto& comp : comps) {
          SubgraphRef a{comp};
          auto child = search(a, Verdict::NotSemistable);
          if (!child) continue;
          auto c = accepted(split_non_ss(s, a, set_difference(s, a),
                                         SubgraphRef{}, std::move(*child)));
          if (c) return c;
        }
        return std::nullopt;
      }
      SubgraphRef a{comps.front()};
      SubgraphRef rest = set_difference(s, a);
      auto left = search(a, Verdict::Semistable);
      auto right = search(rest, Verdict::Semistable);
      if (left && right)
        return accepted(amalgam(s, a, rest, SubgraphRef{}, std::move(*left),
                                std::move(*right)));
      return std::nullopt;
    }

    if (want == Verdict::NotSemistable) {
      for (int v : s.verts) {
        SubgraphRef lk = link_within(s, v);
        SubgraphRef st = star_within(s, v);
        Certificate core = finite_index(st, SubgraphRef({v}), lk, leaf(v));
        if (st == s) {
          auto c = accepted(std::move(core));
          if (c) return c;
          continue;
        }
        auto c = accepted(split_non_ss(
            s, st, set_difference(s, SubgraphRef({v})), lk, std::move(core)));
        if (c) return c;
      }
      return std::nullopt;
    }

    // S2 moves over every star center.
    for (int w : s.verts) {
      if (star_within(s, w) != s) continue;
      SubgraphRef lk = link_within(s, w);
      auto c = accepted(product_star(s, w));
      if (c) return c;
      c = accepted(finite_index(s, SubgraphRef({w}), lk, leaf(w)));
      if (c) return c;
      if (auto sub = search(lk, Verdict::Semistable)) {
        c = accepted(finite_index(s, lk, SubgraphRef({w}), std::move(*sub)));
        if (c) return c;
      }
    }
    // S3 moves over every vertex.
    for (int v : s.verts) {
      SubgraphRef st = star_within(s, v);
      SubgraphRef rest = set_difference(s, SubgraphRef({v}));
      if (st == s || rest.empty()) continue;
      auto left = search(rest, Verdict::Semistable);
      if (!left) continue;
      auto right = search(st, Verdict::Semistable);
      if (!right) continue;
      auto c = accepted(amalgam(s, rest, st, link_within(s, v),
                                std::move(*left), std::move(*right)));
      if (c) return c;
    }
    // S4-style unions seeded from each candidate vertex, permissive variant:
    // accept any pair of stars whose union helps, then recurse on the rest.
    for (int seed : s.verts) {
      if (g_.vertex(seed).order.is_finite()) continue;
      auto c = try_union_from(s, seed);
      if (c && c->verdict == want) return c;
    }
    return std::nullopt;
  }

  std::optional<Certificate> try_union_from(const SubgraphRef& s, int seed) {
    SubgraphRef w_set({seed});
    SubgraphRef u = star_within(s, seed);
    Certificate cert_u = product_star(s, seed);
    if (!check_certificate(g_, cert_u).accepted) return std::nullopt;

    while (true) {
      SubgraphRef rest = set_difference(s, w_set);
      if (rest.empty()) break;
      if (an_.semistability(rest).kind == SsClass::Semistable) break;
      std::optional<int> pick;
      for (int cand : s.verts) {
        if (w_set.contains(cand) || g_.vertex(cand).order.is_finite())
          continue;
        bool touches = false;
        for (int w : w_set.verts)
          if (g_.adjacent(cand, w)) touches = true;
        if (touches) {
          pick = cand;
          break;
        }
      }
      if (!pick) return std::nullopt;
      SubgraphRef stw = star_within(s, *pick);
      SubgraphRef new_u = set_union(u, stw);
      if (new_u != u) {
        Certificate star_cert = product_star(s, *pick);
        if (!check_certificate(g_, star_cert).accepted) return std::nullopt;
        if (new_u == stw)
          cert_u = std::move(star_cert);
        else
          cert_u = union_mm(u, stw, std::move(cert_u), std::move(star_cert));
        u = std::move(new_u);
      }
      w_set = set_union(w_set, SubgraphRef({*pick}));
    }

    if (u == s) {
      if (check_certificate(g_, cert_u).accepted) return cert_u;
      return std::nullopt;
    }
    SubgraphRef rest = set_difference(s, w_set);
    auto left = search(rest, Verdict::Semistable);
    if (!left) return std::nullopt;
    Certificate c = amalgam(s, rest, u, set_difference(u, w_set),
                            std::move(*left), std::move(cert_u));
    if (check_certificate(g_, c).accepted) return c;
    return std::nullopt;
  }
};

}  // namespace

Certificate build_certificate(const ProductGraph& g, int separator_bound) {
  return Builder(g, separator_bound).build(SubgraphRef::whole(g));
}

namespace {

void dot_node(const Certificate& c, const ProductGraph& g, int& counter,
              std::string& out) {
  const int id = counter++;
  std::string label = rule_name(c.rule) + "\\n" + set_names(g, c.subject) +
                      "\\n" + verdict_name(c.verdict);
  if (c.rule == Rule::LeafVertex)
    label += "\\nvertex " + g.vertex(c.leaf_vertex).name;
  std::string escaped;
  for (char ch : label) {
    if (ch == '"') escaped += "\\\"";
    else escaped += ch;
  }
  out += "  n" + std::to_string(id) + " [label=\"" + escaped + "\"];\n";
  for (const Certificate& child : c.children) {
    int child_id = counter;
    dot_node(child, g, counter, out);
    out += "  n" + std::to_string(id) + " -> n" + std::to_string(child_id) +
           ";\n";
  }
}

}  // namespace

std::string export_certificate_dot(const Certificate& c,
                                   const ProductGraph& g) {
  std::string out = "digraph certificate {\n  node [shape=box];\n";
  int counter = 0;
  dot_node(c, g, counter, out);
  out += "}\n";
  return out;
}

}  // namespace gpa
