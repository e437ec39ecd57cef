#ifndef GPA_IO_HPP
#define GPA_IO_HPP

#include <string>

#include <json.hpp>

#include "gpa/certificate.hpp"
#include "gpa/classify.hpp"
#include "gpa/graph.hpp"
#include "gpa/oracle.hpp"

namespace gpa {

using OrderedJson = nlohmann::ordered_json;

// Parses the documented graph description JSON, fills derived defaults
// (finite vertex groups get zero ends, semistable yes, finitely presented),
// and runs validate_graph. Throws InputError with field diagnostics.
ProductGraph parse_input(const std::string& bytes);
ProductGraph parse_input_file(const std::string& path);

// Canonical serialization; parse_input(serialize_graph(g)) == g.
std::string serialize_graph(const ProductGraph& g);
OrderedJson graph_to_json(const ProductGraph& g);

OrderedJson certificate_to_json(const Certificate& c, const ProductGraph& g);
Certificate certificate_from_json(const OrderedJson& j, const ProductGraph& g);

OrderedJson ends_to_json(const EndsVerdict& v, const ProductGraph& g);
OrderedJson semistability_to_json(const SemistabilityVerdict& v,
                                  const ProductGraph& g);
OrderedJson separators_to_json(const std::vector<Separator>& seps,
                               const ProductGraph& g);
OrderedJson ends_estimate_to_json(const EndsEstimateResult& r);

std::string ends_class_name(EndsClass k);
std::string ss_class_name(SsClass k);

}  // namespace gpa

#endif
