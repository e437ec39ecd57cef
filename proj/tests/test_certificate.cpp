#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gpa/certificate.hpp"
#include "gpa/enumerate.hpp"
#include "gpa/errors.hpp"
#include "support/mutate.hpp"
#include "support/reference.hpp"
#include "support/test_util.hpp"

using namespace gpa;
using test_util::graph;
using test_util::inf;
using test_util::z2;

namespace {

Certificate make_leaf(const ProductGraph& g, const std::string& name,
                      Verdict v) {
  Certificate c;
  c.rule = Rule::LeafVertex;
  c.leaf_vertex = g.require_vertex(name);
  c.subject = SubgraphRef({c.leaf_vertex});
  c.verdict = v;
  return c;
}

}  // namespace

TEST_CASE("checker accepts a truthful leaf") {
  ProductGraph g({inf("v", VertexEnds::One, Tri::No)}, {});
  CHECK(check_certificate(g, make_leaf(g, "v", Verdict::NotSemistable))
            .accepted);
}

TEST_CASE("checker rejects a lying leaf with a named condition") {
  ProductGraph g({inf("v", VertexEnds::One, Tri::No)}, {});
  auto report = check_certificate(g, make_leaf(g, "v", Verdict::Semistable));
  CHECK_FALSE(report.accepted);
  REQUIRE(report.first_violation.has_value());
  CHECK(report.first_violation->condition == "leaf-verdict");
  CHECK(report.first_violation->path == "root");
}

TEST_CASE("checker rejects a leaf with unknown annotation") {
  ProductGraph g({inf("v", VertexEnds::One, Tri::Unknown)}, {});
  auto report = check_certificate(g, make_leaf(g, "v", Verdict::Semistable));
  CHECK_FALSE(report.accepted);
  CHECK(report.first_violation->condition == "leaf-annotation");
}

TEST_CASE("checker accepts a product of two infinite factors") {
  ProductGraph g = graph({inf("v"), inf("w")}, {{"v", "w"}});
  Certificate c;
  c.rule = Rule::Product;
  c.subject = SubgraphRef::whole(g);
  c.part_a = SubgraphRef({0});
  c.part_b = SubgraphRef({1});
  c.verdict = Verdict::Semistable;
  CHECK(check_certificate(g, c).accepted);
}

TEST_CASE("checker rejects a product with a finite factor") {
  ProductGraph g = graph({inf("v"), z2("w")}, {{"v", "w"}});
  Certificate c;
  c.rule = Rule::Product;
  c.subject = SubgraphRef::whole(g);
  c.part_a = SubgraphRef({0});
  c.part_b = SubgraphRef({1});
  c.verdict = Verdict::Semistable;
  auto report = check_certificate(g, c);
  CHECK_FALSE(report.accepted);
  CHECK(report.first_violation->condition == "product-infinite");
}

TEST_CASE("checker rejects an amalgam whose sides share an edge") {
  ProductGraph g = test_util::z2_triangle();
  Certificate c;
  c.rule = Rule::AmalgamSS;
  c.subject = SubgraphRef::whole(g);
  c.part_a = SubgraphRef({0, 1});  // {a,b}
  c.part_b = SubgraphRef({1, 2});  // {b,c}
  c.part_c = SubgraphRef({1});
  c.verdict = Verdict::Semistable;
  c.children.push_back(Certificate{});  // placeholders; separation fails first
  c.children.push_back(Certificate{});
  c.children[0].subject = c.part_a;
  c.children[1].subject = c.part_b;
  auto report = check_certificate(g, c);
  CHECK_FALSE(report.accepted);
  CHECK(report.first_violation->condition == "amalgam-separation");
}

TEST_CASE("checker throws on refs outside the graph") {
  ProductGraph g({z2("a")}, {});
  Certificate c = make_leaf(g, "a", Verdict::Semistable);
  c.subject = SubgraphRef({5});
  CHECK_THROWS_AS(check_certificate(g, c), InputError);
}

TEST_CASE("build: a single non-semistable vertex is a leaf") {
  ProductGraph g({inf("v", VertexEnds::One, Tri::No)}, {});
  Certificate c = build_certificate(g);
  CHECK(c.rule == Rule::LeafVertex);
  CHECK(c.verdict == Verdict::NotSemistable);
  CHECK(check_certificate(g, c).accepted);
}

TEST_CASE("build: bad vertex with a finite partner gives finite-index") {
  ProductGraph g = graph({inf("v", VertexEnds::One, Tri::No), z2("w")},
                         {{"v", "w"}});
  Certificate c = build_certificate(g);
  CHECK(c.rule == Rule::FiniteIndex);
  CHECK(c.verdict == Verdict::NotSemistable);
  CHECK(c.part_a.names(g) == std::vector<std::string>{"v"});
  CHECK(c.part_b.names(g) == std::vector<std::string>{"w"});
  REQUIRE(c.children.size() == 1);
  CHECK(c.children[0].rule == Rule::LeafVertex);
  CHECK(check_certificate(g, c).accepted);
}

TEST_CASE("build: non-semistable factor with infinite partner gives product") {
  ProductGraph g = graph({inf("v", VertexEnds::One, Tri::No), inf("w")},
                         {{"v", "w"}});
  Certificate c = build_certificate(g);
  CHECK(c.rule == Rule::Product);
  CHECK(c.verdict == Verdict::Semistable);
  CHECK(check_certificate(g, c).accepted);
}

TEST_CASE("build: bad vertex inside a larger graph splits off its star") {
  // v bad (link {w} finite complete), plus a tail w-x.
  ProductGraph g = graph(
      {inf("v", VertexEnds::One, Tri::No), z2("w"), inf("x")},
      {{"v", "w"}, {"w", "x"}});
  Certificate c = build_certificate(g);
  CHECK(c.rule == Rule::SplitNonSS);
  CHECK(c.verdict == Verdict::NotSemistable);
  CHECK(c.part_a.names(g) == std::vector<std::string>{"v", "w"});
  CHECK(c.part_c.names(g) == std::vector<std::string>{"w"});
  CHECK(check_certificate(g, c).accepted);
}

TEST_CASE("build: union strategy covers adjacent non-semistable vertices") {
  // Path a-b-c-d with two adjacent non-semistable centers and a finite tail:
  // the stars of b and c must be joined by a union move.
  ProductGraph g = graph(
      {inf("a"), inf("b", VertexEnds::One, Tri::No),
       inf("c", VertexEnds::One, Tri::No), z2("d")},
      {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  CHECK(semistability_of(g).kind == SsClass::Semistable);
  Certificate c = build_certificate(g);
  CHECK(check_certificate(g, c).accepted);
  CHECK(c.rule == Rule::UnionMM);
  CHECK(c.verdict == Verdict::Semistable);
}

TEST_CASE("build: disconnected graphs fold over empty amalgams") {
  ProductGraph g = graph({z2("a"), inf("b"), z2("c")}, {});
  Certificate c = build_certificate(g);
  CHECK(c.rule == Rule::AmalgamSS);
  CHECK(c.part_c.empty());
  CHECK(check_certificate(g, c).accepted);

  ProductGraph bad = graph({z2("a"), inf("b", VertexEnds::One, Tri::No)}, {});
  Certificate cb = build_certificate(bad);
  CHECK(cb.rule == Rule::SplitNonSS);
  CHECK(cb.verdict == Verdict::NotSemistable);
  CHECK(check_certificate(bad, cb).accepted);
}

TEST_CASE("build throws UnknownVerdict on undetermined inputs") {
  ProductGraph g = graph({inf("v", VertexEnds::One, Tri::Unknown), z2("w")},
                         {{"v", "w"}});
  CHECK_THROWS_AS(build_certificate(g), UnknownVerdictError);
}

TEST_CASE("build throws on the empty graph") {
  CHECK_THROWS_AS(build_certificate(ProductGraph({}, {})), InputError);
}

TEST_CASE("dot export: leaf is a single node and parses") {
  ProductGraph g({inf("v", VertexEnds::One, Tri::No)}, {});
  std::string dot = export_certificate_dot(build_certificate(g), g);
  CHECK(dot.find("leaf_vertex") != std::string::npos);
  CHECK(dot.find("->") == std::string::npos);
  std::string err;
  CHECK_MESSAGE(reference::dot_parses(dot, &err), err);
}

TEST_CASE("dot export: finite-index has two nodes and one edge") {
  ProductGraph g = graph({inf("v", VertexEnds::One, Tri::No), z2("w")},
                         {{"v", "w"}});
  std::string dot = export_certificate_dot(build_certificate(g), g);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  std::string err;
  CHECK_MESSAGE(reference::dot_parses(dot, &err), err);
}

TEST_CASE("generated certificates parse as DOT across the small sweep") {
  auto result = run_sweep(
      3, /*parallel=*/false,
      [](const GraphClass&, const std::vector<Status>&,
         const ProductGraph& g) -> std::optional<std::string> {
        Certificate c = build_certificate(g);
        std::string err;
        if (!reference::dot_parses(export_certificate_dot(c, g), &err))
          return "dot parse failure: " + err;
        return std::nullopt;
      });
  CHECK(result.failures == 0);
}

TEST_CASE("soundness and completeness on the small sweep") {
  auto result = run_sweep(
      4, /*parallel=*/false,
      [](const GraphClass&, const std::vector<Status>&,
         const ProductGraph& g) -> std::optional<std::string> {
        auto verdict = semistability_of(g).kind;
        Certificate c = build_certificate(g);
        if (!check_certificate(g, c).accepted) return "rejected";
        bool ss = c.verdict == Verdict::Semistable;
        if (ss != (verdict == SsClass::Semistable)) return "verdict mismatch";
        return std::nullopt;
      });
  CHECK(result.failures == 0);
}

TEST_CASE("mutated certificates never certify a wrong verdict") {
  std::mt19937 rng(7);
  int mutants = 0, accepted_sound = 0;
  auto classes = connected_graph_classes(4);
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const auto& gc = classes[ci];
    std::uint64_t assignments = 1;
    for (int i = 0; i < gc.n; ++i) assignments *= kStatusCount;
    for (std::uint64_t a = 0; a < assignments; a += 11) {
      ProductGraph g = palette_graph(gc, nth_assignment(gc.n, a));
      Certificate c = build_certificate(g);
      for (Certificate& m : mutate::mutations_of(c, g, rng)) {
        ++mutants;
        CheckReport report;
        try {
          report = check_certificate(g, m);
        } catch (const InputError&) {
          continue;  // malformed counts as rejected
        }
        if (!report.accepted) continue;
        // Accepted mutants must still tell the truth about their own subject.
        auto subject_truth =
            semistability_of(full_subgraph(g, m.subject)).kind;
        bool ss = m.verdict == Verdict::Semistable;
        CHECK(ss == (subject_truth == SsClass::Semistable));
        ++accepted_sound;
      }
    }
  }
  CHECK(mutants > 500);
}

TEST_CASE("checker is deterministic") {
  ProductGraph g = graph(
      {inf("a"), inf("b", VertexEnds::One, Tri::No), z2("c")},
      {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  Certificate c = build_certificate(g);
  auto r1 = check_certificate(g, c);
  auto r2 = check_certificate(g, c);
  CHECK(r1.accepted == r2.accepted);
}
