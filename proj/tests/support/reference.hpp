#ifndef GPA_TESTS_REFERENCE_HPP
#define GPA_TESTS_REFERENCE_HPP

// Independent reference implementations used as oracles by the unit and
// acceptance suites. Everything here works from first principles and stays
// off the library code paths it is checking.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpa/graph.hpp"

namespace reference {

// Ball sizes |B_0|, ..., |B_radius| of the word metric on the graph product,
// computed by congruence closure over raw generator words: enumerate every
// word up to the radius over the alphabet of non-identity vertex-group
// elements, then unite words related by one swap of adjacent commuting
// letters or one same-vertex merge. Independent of the normal-form code.
std::vector<std::uint64_t> congruence_ball_sizes(const gpa::ProductGraph& g,
                                                 int radius);

struct PlainSeparator {
  std::vector<int> delta;
  std::vector<std::vector<int>> parts;
};

// Brute force over all vertex subsets: complete, all-finite, removal leaves
// at least two components. Sorted by (size, lexicographic).
std::vector<PlainSeparator> brute_force_separators(const gpa::ProductGraph& g);

// The Main Theorem predicate re-implemented directly on raw data: true iff
// some vertex v has non_semistable[v] and every pair of its neighbors is
// adjacent and every neighbor is finite. Used against semistability_of.
bool raw_not_semistable(int n, const std::vector<std::pair<int, int>>& edges,
                        const std::vector<bool>& non_semistable,
                        const std::vector<bool>& finite);

// Minimal DOT syntax check: digraph header, balanced braces, statements of
// the forms `id [attrs];` and `id -> id;`.
bool dot_parses(const std::string& text, std::string* error = nullptr);

// Small JSON Schema subset validator: type (string or array), properties,
// required, items, enum, additionalProperties:false, and $ref into
// #/definitions. Enough for the shipped report-v1 and cert-v1 schemas.
bool matches_schema(const nlohmann::json& value, const nlohmann::json& schema,
                    const nlohmann::json& root_schema,
                    std::string* error = nullptr);
bool matches_schema_file(const nlohmann::json& value,
                         const std::string& schema_path,
                         std::string* error = nullptr);

}  // namespace reference

#endif
