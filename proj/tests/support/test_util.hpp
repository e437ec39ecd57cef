#ifndef GPA_TESTS_TEST_UTIL_HPP
#define GPA_TESTS_TEST_UTIL_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gpa/graph.hpp"
#include "gpa/table.hpp"

namespace test_util {

// Z2 vertex with an explicit <x : x^2> presentation and a concrete table.
inline gpa::VertexGroupInfo z2(std::string name) {
  static const auto table = std::make_shared<const gpa::FiniteGroupTable>(
      gpa::FiniteGroupTable::cyclic(2));
  gpa::VertexGroupInfo v;
  v.name = std::move(name);
  v.order = gpa::GroupOrder::finite(2);
  v.ends = gpa::VertexEnds::Zero;
  v.semistable = gpa::Tri::Yes;
  v.finitely_presented = true;
  v.presentation = gpa::VertexPresentation{{"x"}, {{{0, 1}, {0, 1}}}};
  v.table = table;
  return v;
}

// Cyclic vertex of order n with a table only (presentation synthesized).
inline gpa::VertexGroupInfo zn(std::string name, int n) {
  gpa::VertexGroupInfo v;
  v.name = std::move(name);
  v.order = gpa::GroupOrder::finite(n);
  v.ends = gpa::VertexEnds::Zero;
  v.semistable = gpa::Tri::Yes;
  v.finitely_presented = true;
  v.table = std::make_shared<const gpa::FiniteGroupTable>(
      gpa::FiniteGroupTable::cyclic(n));
  return v;
}

inline gpa::VertexGroupInfo inf(std::string name,
                                gpa::VertexEnds ends = gpa::VertexEnds::One,
                                gpa::Tri semistable = gpa::Tri::Yes,
                                bool fp = true) {
  gpa::VertexGroupInfo v;
  v.name = std::move(name);
  v.order = gpa::GroupOrder::infinite();
  v.ends = ends;
  v.semistable = semistable;
  v.finitely_presented = fp;
  return v;
}

inline gpa::ProductGraph graph(
    std::vector<gpa::VertexGroupInfo> vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  return gpa::ProductGraph(std::move(vertices), edges);
}

// Path a-b-c with Z2 vertex groups: the running RACG example.
inline gpa::ProductGraph z2_path3() {
  return graph({z2("a"), z2("b"), z2("c")}, {{"a", "b"}, {"b", "c"}});
}

inline gpa::ProductGraph z2_triangle() {
  return graph({z2("a"), z2("b"), z2("c")},
               {{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

}  // namespace test_util

#endif
