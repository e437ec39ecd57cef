#include "gpa/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gpa/errors.hpp"

namespace gpa {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

std::string ends_name(VertexEnds e) {
  switch (e) {
    case VertexEnds::Zero: return "zero";
    case VertexEnds::One: return "one";
    case VertexEnds::Two: return "two";
    case VertexEnds::Many: return "many";
    case VertexEnds::Unknown: return "unknown";
  }
  return "?";
}

VertexEnds ends_from(const std::string& s, const std::string& where) {
  if (s == "zero") return VertexEnds::Zero;
  if (s == "one") return VertexEnds::One;
  if (s == "two") return VertexEnds::Two;
  if (s == "many") return VertexEnds::Many;
  if (s == "unknown") return VertexEnds::Unknown;
  fail(where, "ends must be one of zero|one|two|many|unknown, got '" + s + "'");
}

std::string tri_name(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

Tri tri_from(const std::string& s, const std::string& where) {
  if (s == "yes") return Tri::Yes;
  if (s == "no") return Tri::No;
  if (s == "unknown") return Tri::Unknown;
  fail(where, "expected yes|no|unknown, got '" + s + "'");
}

Word parse_relator(const Json& j, const VertexPresentation& p,
                   const std::string& where) {
  if (!j.is_array()) fail(where, "a relator must be an array of letters");
  Word w;
  for (const auto& item : j) {
    if (!item.is_string()) fail(where, "relator letters must be strings");
    std::string s = item.get<std::string>();
    int exp = 1;
    if (s.size() > 3 && s.substr(s.size() - 3) == "^-1") {
      exp = -1;
      s = s.substr(0, s.size() - 3);
    }
    auto it = std::find(p.generators.begin(), p.generators.end(), s);
    if (it == p.generators.end())
      fail(where, "relator letter '" + s + "' is not a declared generator");
    w.push_back({static_cast<int>(it - p.generators.begin()), exp});
  }
  return w;
}

VertexPresentation parse_presentation(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "presentation must be an object");
  VertexPresentation p;
  if (!j.contains("generators") || !j["generators"].is_array())
    fail(where, "presentation needs a generators array");
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) fail(where, "generator symbols must be strings");
    p.generators.push_back(g.get<std::string>());
  }
  if (j.contains("relators")) {
    if (!j["relators"].is_array())
      fail(where, "relators must be an array of words");
    for (const auto& r : j["relators"])
      p.relators.push_back(parse_relator(r, p, where));
  }
  return p;
}

std::shared_ptr<const FiniteGroupTable> parse_table(const Json& j,
                                                    const std::string& where) {
  if (!j.is_object()) fail(where, "table must be an object");
  if (!j.contains("elements") || !j["elements"].is_array())
    fail(where, "table needs an elements array");
  if (!j.contains("mul") || !j["mul"].is_array())
    fail(where, "table needs a mul matrix");
  std::vector<std::string> elements;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) fail(where, "table element names must be strings");
    elements.push_back(e.get<std::string>());
  }
  std::vector<std::vector<int>> mul;
  for (const auto& row : j["mul"]) {
    if (!row.is_array()) fail(where, "mul rows must be arrays");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) fail(where, "mul entries must be integers");
      r.push_back(x.get<int>());
    }
    mul.push_back(std::move(r));
  }
  try {
    return std::make_shared<const FiniteGroupTable>(
        FiniteGroupTable::from_data(std::move(elements), std::move(mul)));
  } catch (const InputError& e) {
    fail(where, e.what());
    throw;  // unreachable
  }
}

}  // namespace

ProductGraph parse_input(const std::string& bytes) {
  Json j;
  try {
    j = Json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("input must be a JSON object");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw InputError("input needs a vertices array");

  std::vector<VertexGroupInfo> vertices;
  for (const auto& vj : j["vertices"]) {
    if (!vj.is_object()) throw InputError("vertices must be objects");
    if (!vj.contains("name") || !vj["name"].is_string())
      throw InputError("every vertex needs a string name");
    VertexGroupInfo v;
    v.name = vj["name"].get<std::string>();
    const std::string where = "vertex '" + v.name + "'";

    if (!vj.contains("order")) fail(where, "missing order");
    const auto& oj = vj["order"];
    if (oj.is_string() && oj.get<std::string>() == "infinite")
      v.order = GroupOrder::infinite();
    else if (oj.is_number_unsigned() || oj.is_number_integer()) {
      auto n = oj.get<long long>();
      if (n < 1) fail(where, "finite order must be >= 1");
      v.order = GroupOrder::finite(static_cast<std::uint64_t>(n));
    } else
      fail(where, "order must be \"infinite\" or a positive integer");

    if (vj.contains("presentation"))
      v.presentation = parse_presentation(vj["presentation"], where);
    if (vj.contains("table")) v.table = parse_table(vj["table"], where);

    // Derived defaults: finite groups have zero ends, are semistable and
    // finitely presented; a presentation implies finitely presented.
    if (vj.contains("ends"))
      v.ends = ends_from(vj["ends"].get<std::string>(), where);
    else
      v.ends = v.order.is_finite() ? VertexEnds::Zero : VertexEnds::Unknown;
    if (vj.contains("semistable"))
      v.semistable = tri_from(vj["semistable"].get<std::string>(), where);
    else
      v.semistable = v.order.is_finite() ? Tri::Yes : Tri::Unknown;
    if (vj.contains("fp")) {
      if (!vj["fp"].is_boolean()) fail(where, "fp must be a boolean");
      v.finitely_presented = vj["fp"].get<bool>();
    } else {
      v.finitely_presented =
          v.order.is_finite() || v.presentation.has_value();
    }
    vertices.push_back(std::move(v));
  }

  std::vector<std::pair<std::string, std::string>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw InputError("edges must be an array");
    for (const auto& ej : j["edges"]) {
      if (!ej.is_array() || ej.size() != 2 || !ej[0].is_string() ||
          !ej[1].is_string())
        throw InputError("every edge must be a two-element array of names");
      edges.emplace_back(ej[0].get<std::string>(), ej[1].get<std::string>());
    }
  }

  ProductGraph g(std::move(vertices), edges);
  auto violations = validate_graph(g);
  if (!violations.empty()) {
    std::string msg = "invalid graph:";
    for (const auto& v : violations)
      msg += "\n  [" + v.code + "] " + v.detail;
    throw InputError(msg);
  }
  return g;
}

ProductGraph parse_input_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_input(ss.str());
}

OrderedJson graph_to_json(const ProductGraph& g) {
  Json out;
  out["vertices"] = Json::array();
  for (const auto& v : g.vertices()) {
    Json vj;
    vj["name"] = v.name;
    if (v.order.is_finite())
      vj["order"] = *v.order.value;
    else
      vj["order"] = "infinite";
    vj["ends"] = ends_name(v.ends);
    vj["semistable"] = tri_name(v.semistable);
    vj["fp"] = v.finitely_presented;
    if (v.presentation) {
      Json pj;
      pj["generators"] = v.presentation->generators;
      pj["relators"] = Json::array();
      for (const auto& w : v.presentation->relators) {
        Json wj = Json::array();
        for (const auto& l : w) {
          std::string s = v.presentation->generators[l.gen];
          if (l.exp == -1) s += "^-1";
          wj.push_back(s);
        }
        pj["relators"].push_back(wj);
      }
      vj["presentation"] = pj;
    }
    if (v.table) {
      Json tj;
      tj["elements"] = v.table->elements();
      tj["mul"] = v.table->mul_table();
      vj["table"] = tj;
    }
    out["vertices"].push_back(vj);
  }
  out["edges"] = Json::array();
  for (auto [u, v] : g.edges())
    out["edges"].push_back(
        Json::array({g.vertex(u).name, g.vertex(v).name}));
  return out;
}

std::string serialize_graph(const ProductGraph& g) {
  return graph_to_json(g).dump(2) + "\n";
}

namespace {

Json names_json(const ProductGraph& g, const SubgraphRef& s) {
  Json out = Json::array();
  for (const auto& n : s.names(g)) out.push_back(n);
  return out;
}

SubgraphRef names_from_json(const Json& j, const ProductGraph& g,
                            const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of vertex names");
  std::vector<std::string> names;
  for (const auto& n : j) {
    if (!n.is_string()) fail(where, "vertex names must be strings");
    names.push_back(n.get<std::string>());
  }
  return SubgraphRef::from_names(g, names);
}

Json cert_node_to_json(const Certificate& c, const ProductGraph& g) {
  Json out;
  out["rule"] = rule_name(c.rule);
  out["subject"] = names_json(g, c.subject);
  out["verdict"] =
      c.verdict == Verdict::Semistable ? "semistable" : "not_semistable";
  switch (c.rule) {
    case Rule::LeafVertex:
      out["vertex"] = g.vertex(c.leaf_vertex).name;
      break;
    case Rule::Product:
      out["factor1"] = names_json(g, c.part_a);
      out["factor2"] = names_json(g, c.part_b);
      break;
    case Rule::FiniteIndex:
      out["core"] = names_json(g, c.part_a);
      out["finite_partner"] = names_json(g, c.part_b);
      break;
    case Rule::AmalgamSS:
    case Rule::SplitNonSS:
      out["a"] = names_json(g, c.part_a);
      out["b"] = names_json(g, c.part_b);
      out["c"] = names_json(g, c.part_c);
      break;
    case Rule::UnionMM:
      out["a"] = names_json(g, c.part_a);
      out["b"] = names_json(g, c.part_b);
      break;
  }
  out["children"] = Json::array();
  for (const auto& child : c.children)
    out["children"].push_back(cert_node_to_json(child, g));
  return out;
}

Certificate cert_node_from_json(const Json& j, const ProductGraph& g) {
  const std::string where = "certificate node";
  if (!j.is_object()) fail(where, "must be an object");
  if (!j.contains("rule") || !j["rule"].is_string())
    fail(where, "missing rule");
  Certificate c;
  const std::string rule = j["rule"].get<std::string>();
  if (rule == "leaf_vertex") c.rule = Rule::LeafVertex;
  else if (rule == "product") c.rule = Rule::Product;
  else if (rule == "finite_index") c.rule = Rule::FiniteIndex;
  else if (rule == "amalgam_ss") c.rule = Rule::AmalgamSS;
  else if (rule == "union_mm") c.rule = Rule::UnionMM;
  else if (rule == "split_non_ss") c.rule = Rule::SplitNonSS;
  else fail(where, "unknown rule '" + rule + "'");

  if (!j.contains("subject")) fail(where, "missing subject");
  c.subject = names_from_json(j["subject"], g, where);
  if (!j.contains("verdict") || !j["verdict"].is_string())
    fail(where, "missing verdict");
  const std::string verdict = j["verdict"].get<std::string>();
  if (verdict == "semistable") c.verdict = Verdict::Semistable;
  else if (verdict == "not_semistable") c.verdict = Verdict::NotSemistable;
  else fail(where, "unknown verdict '" + verdict + "'");

  auto part = [&](const char* key) -> SubgraphRef {
    if (!j.contains(key))
      fail(where, std::string("missing field '") + key + "' for rule " + rule);
    return names_from_json(j[key], g, where);
  };
  switch (c.rule) {
    case Rule::LeafVertex:
      if (!j.contains("vertex") || !j["vertex"].is_string())
        fail(where, "leaf node needs a vertex name");
      c.leaf_vertex = g.require_vertex(j["vertex"].get<std::string>());
      break;
    case Rule::Product:
      c.part_a = part("factor1");
      c.part_b = part("factor2");
      break;
    case Rule::FiniteIndex:
      c.part_a = part("core");
      c.part_b = part("finite_partner");
      break;
    case Rule::AmalgamSS:
    case Rule::SplitNonSS:
      c.part_a = part("a");
      c.part_b = part("b");
      c.part_c = part("c");
      break;
    case Rule::UnionMM:
      c.part_a = part("a");
      c.part_b = part("b");
      break;
  }
  if (j.contains("children")) {
    if (!j["children"].is_array()) fail(where, "children must be an array");
    for (const auto& child : j["children"])
      c.children.push_back(cert_node_from_json(child, g));
  }
  return c;
}

}  // namespace

OrderedJson certificate_to_json(const Certificate& c, const ProductGraph& g) {
  Json out;
  out["version"] = "cert-v1";
  out["root"] = cert_node_to_json(c, g);
  return out;
}

Certificate certificate_from_json(const OrderedJson& j,
                                  const ProductGraph& g) {
  if (!j.is_object() || !j.contains("version") ||
      j["version"] != "cert-v1" || !j.contains("root"))
    throw InputError("not a cert-v1 document");
  return cert_node_from_json(j["root"], g);
}

std::string ends_class_name(EndsClass k) {
  switch (k) {
    case EndsClass::Zero: return "zero_ends";
    case EndsClass::One: return "one_end";
    case EndsClass::MoreThanOne: return "more_than_one_end";
    case EndsClass::Unknown: return "unknown";
  }
  return "?";
}

std::string ss_class_name(SsClass k) {
  switch (k) {
    case SsClass::Semistable: return "semistable";
    case SsClass::NotSemistable: return "not_semistable";
    case SsClass::Unknown: return "unknown";
  }
  return "?";
}

OrderedJson ends_to_json(const EndsVerdict& v, const ProductGraph& g) {
  Json out;
  out["verdict"] = ends_class_name(v.kind);
  if (v.witness_vertex)
    out["witness_vertex"] = g.vertex(*v.witness_vertex).name;
  if (v.witness_separator) {
    Json sj;
    sj["delta"] = names_json(g, v.witness_separator->delta);
    sj["parts"] = Json::array();
    for (const auto& part : v.witness_separator->parts) {
      Json pj = Json::array();
      for (int x : part) pj.push_back(g.vertex(x).name);
      sj["parts"].push_back(pj);
    }
    out["witness_separator"] = sj;
  }
  if (v.note) out["note"] = *v.note;
  return out;
}

OrderedJson semistability_to_json(const SemistabilityVerdict& v,
                                  const ProductGraph& g) {
  Json out;
  out["verdict"] = ss_class_name(v.kind);
  if (v.witness) out["witness"] = g.vertex(*v.witness).name;
  Json bad;
  bad["definite"] = Json::array();
  for (int x : v.bad.definite) bad["definite"].push_back(g.vertex(x).name);
  bad["potential"] = Json::array();
  for (int x : v.bad.potential) bad["potential"].push_back(g.vertex(x).name);
  out["bad_vertices"] = bad;
  if (v.componentwise) out["note"] = "componentwise extension";
  return out;
}

OrderedJson separators_to_json(const std::vector<Separator>& seps,
                               const ProductGraph& g) {
  Json out = Json::array();
  for (const auto& s : seps) {
    Json sj;
    sj["delta"] = names_json(g, s.delta);
    sj["parts"] = Json::array();
    for (const auto& part : s.parts) {
      Json pj = Json::array();
      for (int x : part) pj.push_back(g.vertex(x).name);
      sj["parts"].push_back(pj);
    }
    sj["minimal"] = s.minimal;
    out.push_back(sj);
  }
  return out;
}

OrderedJson ends_estimate_to_json(const EndsEstimateResult& r) {
  Json out;
  switch (r.verdict) {
    case EndsEstimate::Zero: out["verdict"] = "zero_ends"; break;
    case EndsEstimate::One: out["verdict"] = "one_end"; break;
    case EndsEstimate::Two: out["verdict"] = "two_ends"; break;
    case EndsEstimate::Many: out["verdict"] = "many_ends"; break;
    case EndsEstimate::Inconclusive: out["verdict"] = "inconclusive"; break;
  }
  if (r.order) out["order"] = *r.order;
  out["component_counts"] = r.component_counts;
  return out;
}

}  // namespace gpa
