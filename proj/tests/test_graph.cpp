#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gpa/enumerate.hpp"
#include "gpa/errors.hpp"
#include "gpa/graph.hpp"
#include "support/reference.hpp"
#include "support/test_util.hpp"

using namespace gpa;
using test_util::graph;
using test_util::inf;
using test_util::z2;

namespace {

bool has_violation(const std::vector<Violation>& vs, const std::string& code) {
  for (const auto& v : vs)
    if (v.code == code) return true;
  return false;
}

}  // namespace

TEST_CASE("validate_graph flags self-loops") {
  ProductGraph g({z2("a"), z2("b")}, {{"a", "a"}, {"a", "b"}});
  CHECK(has_violation(validate_graph(g), "self-loop"));
}

TEST_CASE("validate_graph flags finite groups with nonzero ends") {
  auto v = z2("a");
  v.order = GroupOrder::finite(4);
  v.ends = VertexEnds::One;
  v.table.reset();
  v.presentation.reset();
  ProductGraph g({v}, {});
  CHECK(has_violation(validate_graph(g), "finite-ends"));
}

TEST_CASE("validate_graph accepts the empty graph") {
  ProductGraph g({}, {});
  CHECK(validate_graph(g).empty());
}

TEST_CASE("validate_graph rejects trivial vertex groups") {
  auto v = inf("a");
  v.order = GroupOrder::finite(1);
  v.ends = VertexEnds::Zero;
  v.semistable = Tri::Yes;
  ProductGraph g({v}, {});
  CHECK(has_violation(validate_graph(g), "trivial-vertex-group"));
}

TEST_CASE("validate_graph checks table order agreement") {
  auto v = z2("a");
  v.order = GroupOrder::finite(3);
  v.presentation.reset();
  ProductGraph g({v}, {});
  CHECK(has_violation(validate_graph(g), "table-order"));
}

TEST_CASE("validate_graph flags duplicate edges and names") {
  ProductGraph g({z2("a"), z2("a"), z2("b")},
                 {{"a", "b"}, {"b", "a"}});
  auto vs = validate_graph(g);
  CHECK(has_violation(vs, "duplicate-vertex-name"));
  CHECK(has_violation(vs, "duplicate-edge"));
}

TEST_CASE("edges referencing unknown vertices cannot be built") {
  CHECK_THROWS_AS(ProductGraph({z2("a")}, {{"a", "zz"}}), InputError);
}

TEST_CASE("full_subgraph drops edges between non-adjacent picks") {
  ProductGraph g = test_util::z2_path3();
  ProductGraph sub = full_subgraph(g, SubgraphRef::from_names(g, {"a", "c"}));
  CHECK(sub.size() == 2);
  CHECK(sub.edges().empty());
}

TEST_CASE("full_subgraph on all vertices is the identity") {
  ProductGraph g = test_util::z2_path3();
  CHECK(full_subgraph(g, SubgraphRef::whole(g)) == g);
}

TEST_CASE("full_subgraph keeps induced edges") {
  ProductGraph g = test_util::z2_triangle();
  ProductGraph sub = full_subgraph(g, SubgraphRef::from_names(g, {"a", "b"}));
  CHECK(sub.edges() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("link and star") {
  ProductGraph g = test_util::z2_path3();
  CHECK(link(g, "b").names(g) == std::vector<std::string>{"a", "c"});
  CHECK(star(g, "b").names(g) == std::vector<std::string>{"a", "b", "c"});
  CHECK(star(g, "a").names(g) == std::vector<std::string>{"a", "b"});

  ProductGraph isolated({z2("v")}, {});
  CHECK(link(isolated, "v").empty());
  CHECK(star(isolated, "v").names(isolated) == std::vector<std::string>{"v"});

  ProductGraph tri = test_util::z2_triangle();
  CHECK(link(tri, "a").names(tri) == std::vector<std::string>{"b", "c"});

  CHECK_THROWS_AS(link(g, "missing"), InputError);
}

TEST_CASE("is_complete") {
  ProductGraph tri = test_util::z2_triangle();
  CHECK(is_complete(tri, SubgraphRef::whole(tri)));
  ProductGraph path = test_util::z2_path3();
  CHECK_FALSE(is_complete(path, SubgraphRef::from_names(path, {"a", "c"})));
  CHECK(is_complete(path, SubgraphRef{}));
  CHECK(is_complete(path, SubgraphRef::from_names(path, {"b"})));
}

TEST_CASE("spans_finite_subgroup") {
  ProductGraph path = test_util::z2_path3();
  CHECK(spans_finite_subgroup(path, SubgraphRef{}) == Tri::Yes);
  CHECK(spans_finite_subgroup(path, SubgraphRef::from_names(path, {"a", "b"})) ==
        Tri::Yes);
  // Non-adjacent order-2 groups span an infinite dihedral group.
  CHECK(spans_finite_subgroup(path, SubgraphRef::from_names(path, {"a", "c"})) ==
        Tri::No);
  ProductGraph with_inf = graph({z2("a"), inf("b")}, {{"a", "b"}});
  CHECK(spans_finite_subgroup(with_inf,
                              SubgraphRef::from_names(with_inf, {"a", "b"})) ==
        Tri::No);
}

TEST_CASE("separators on the Z2 path") {
  ProductGraph g = test_util::z2_path3();
  auto seps = find_finite_complete_separators(g);
  REQUIRE(seps.size() == 1);
  CHECK(seps[0].delta.names(g) == std::vector<std::string>{"b"});
  CHECK(seps[0].parts == std::vector<std::vector<int>>{{0}, {2}});
  CHECK(seps[0].minimal);
}

TEST_CASE("complete graphs have no separators") {
  auto seps = find_finite_complete_separators(test_util::z2_triangle());
  CHECK(seps.empty());
}

TEST_CASE("disconnected graphs separate over the empty subgraph") {
  ProductGraph g = graph({z2("a"), z2("b")}, {});
  auto seps = find_finite_complete_separators(g);
  REQUIRE(!seps.empty());
  CHECK(seps[0].delta.empty());
  CHECK(seps[0].parts == std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("separator enumeration respects the vertex bound") {
  std::vector<VertexGroupInfo> vs;
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 0; i < 25; ++i) vs.push_back(z2("v" + std::to_string(i)));
  for (int i = 0; i + 1 < 25; ++i)
    es.emplace_back("v" + std::to_string(i), "v" + std::to_string(i + 1));
  ProductGraph g(std::move(vs), es);
  CHECK_THROWS_AS(find_finite_complete_separators(g), BoundExceededError);
  CHECK_NOTHROW(find_finite_complete_separators(g, 25));
}

TEST_CASE("infinite vertex groups never enter a separator") {
  // A path through an infinite vertex: b cannot separate.
  ProductGraph g = graph({z2("a"), inf("b"), z2("c")}, {{"a", "b"}, {"b", "c"}});
  CHECK(find_finite_complete_separators(g).empty());
  auto first = first_finite_complete_separator(g);
  CHECK_FALSE(first.has_value());
}

TEST_CASE("star is idempotent under restriction") {
  for (const auto& g :
       {test_util::z2_path3(), test_util::z2_triangle(),
        graph({z2("a"), z2("b"), z2("c"), z2("d")},
              {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}})}) {
    for (int v = 0; v < g.size(); ++v) {
      SubgraphRef st = star(g, v);
      ProductGraph sub = full_subgraph(g, st);
      int local = sub.require_vertex(g.vertex(v).name);
      SubgraphRef st2 = star(sub, local);
      CHECK(st2.size() == st.size());
    }
  }
}

TEST_CASE("spans_finite(link) agrees with the direct double computation") {
  auto classes = connected_graph_classes(4);
  for (const auto& gc : classes) {
    std::uint64_t assignments = 1;
    for (int i = 0; i < gc.n; ++i) assignments *= kStatusCount;
    for (std::uint64_t a = 0; a < assignments; ++a) {
      ProductGraph g = palette_graph(gc, nth_assignment(gc.n, a));
      for (int v = 0; v < g.size(); ++v) {
        SubgraphRef lk = link(g, v);
        bool direct = is_complete(g, lk);
        for (int u : lk.verts)
          direct = direct && g.vertex(u).order.is_finite();
        CHECK((spans_finite_subgroup(g, lk) == Tri::Yes) == direct);
      }
    }
  }
}

TEST_CASE("separator removal increases the component count on connected graphs") {
  auto classes = connected_graph_classes(5);
  for (const auto& gc : classes) {
    ProductGraph g = palette_graph(gc, nth_assignment(gc.n, 0));  // all Z2
    std::size_t before = components(g).size();
    REQUIRE(before == 1);
    for (const auto& sep : find_finite_complete_separators(g)) {
      SubgraphRef rest = set_difference(SubgraphRef::whole(g), sep.delta);
      CHECK(components_within(g, rest).size() > before);
    }
  }
}

TEST_CASE("separator enumeration matches brute force on small graphs") {
  auto classes = connected_graph_classes(5);
  for (const auto& gc : classes) {
    // Mixed annotations exercise the finite-vertex filter.
    std::uint64_t assignments = 1;
    for (int i = 0; i < gc.n; ++i) assignments *= kStatusCount;
    for (std::uint64_t a = 0; a < assignments; a += 7) {
      ProductGraph g = palette_graph(gc, nth_assignment(gc.n, a));
      auto got = find_finite_complete_separators(g);
      auto expected = reference::brute_force_separators(g);
      REQUIRE(got.size() == expected.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].delta.verts == expected[i].delta);
        CHECK(got[i].parts == expected[i].parts);
      }
    }
  }
  // An 8-vertex case beyond the palette sweep.
  std::vector<VertexGroupInfo> vs;
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 0; i < 8; ++i) vs.push_back(z2("v" + std::to_string(i)));
  for (int i = 0; i + 1 < 8; ++i)
    es.emplace_back("v" + std::to_string(i), "v" + std::to_string(i + 1));
  es.emplace_back("v0", "v7");  // cycle
  es.emplace_back("v0", "v4");  // chord
  ProductGraph cycle(std::move(vs), es);
  auto got = find_finite_complete_separators(cycle);
  auto expected = reference::brute_force_separators(cycle);
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i)
    CHECK(got[i].delta.verts == expected[i].delta);
}

TEST_CASE("subgraph refs sort, dedupe, and round-trip masks") {
  SubgraphRef s({3, 1, 2, 1});
  CHECK(s.verts == std::vector<int>{1, 2, 3});
  CHECK(SubgraphRef::from_mask(s.mask()) == s);
  CHECK(set_union(SubgraphRef({1}), SubgraphRef({2})).verts ==
        std::vector<int>{1, 2});
  CHECK(set_intersection(SubgraphRef({1, 2}), SubgraphRef({2, 3})).verts ==
        std::vector<int>{2});
  CHECK(set_difference(SubgraphRef({1, 2}), SubgraphRef({2})).verts ==
        std::vector<int>{1});
}
