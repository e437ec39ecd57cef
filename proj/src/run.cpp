#include "gpa/run.hpp"

#include <cstdlib>

#include "gpa/errors.hpp"
#include "gpa/io.hpp"
#include "gpa/presentation.hpp"

namespace gpa {

namespace {

int resolve_vertex_bound(const AnalysisRequest& req) {
  if (req.max_vertices) return *req.max_vertices;
  if (const char* env = std::getenv("GPA_MAX_VERTICES")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
    throw InputError("GPA_MAX_VERTICES must be a positive integer, got '" +
                     std::string(env) + "'");
  }
  return kDefaultVertexBound;
}

struct Analysis {
  ProductGraph graph;
  int bound;
};

Analysis load(const AnalysisRequest& req) {
  ProductGraph g = req.input_bytes ? parse_input(*req.input_bytes)
                                   : parse_input_file(req.input_path);
  int bound = resolve_vertex_bound(req);
  if (req.subgraph) {
    SubgraphRef s = SubgraphRef::from_names(g, *req.subgraph);
    g = full_subgraph(g, s);
  }
  return {std::move(g), bound};
}

void require_format(const AnalysisRequest& req,
                    std::initializer_list<OutputFormat> allowed) {
  for (auto f : allowed)
    if (req.format == f) return;
  throw InputError("output format not supported for this command");
}

int run_analyze(const AnalysisRequest& req, std::string& out) {
  require_format(req, {OutputFormat::Json});
  Analysis a = load(req);
  OrderedJson report;
  report["version"] = "report-v1";
  report["command"] = "analyze";

  EndsVerdict ends = ends_of(a.graph, a.bound);
  SemistabilityVerdict ss = semistability_of(a.graph);
  report["ends"] = ends_to_json(ends, a.graph);
  report["semistability"] = semistability_to_json(ss, a.graph);

  OrderedJson notes = OrderedJson::array();
  if (a.graph.empty()) notes.push_back("trivial group: empty graph");
  if (ss.componentwise) notes.push_back("componentwise extension");

  if (a.graph.empty() || ss.kind == SsClass::Unknown) {
    report["certificate"] = nullptr;
    if (a.graph.empty())
      notes.push_back("no certificate: leaves are vertices");
    else
      notes.push_back("no certificate: verdict unknown");
  } else {
    Certificate cert = build_certificate(a.graph, a.bound);
    CheckReport check = check_certificate(a.graph, cert);
    if (!check.accepted)
      throw Error("internal error: generated certificate rejected at " +
                  check.first_violation->path + " (" +
                  check.first_violation->condition + ")");
    report["certificate"] = certificate_to_json(cert, a.graph);
  }
  report["notes"] = notes;
  out = report.dump(2) + "\n";
  return (ends.kind == EndsClass::Unknown || ss.kind == SsClass::Unknown)
             ? kExitUnknownVerdict
             : kExitOk;
}

int run_ends(const AnalysisRequest& req, std::string& out) {
  require_format(req, {OutputFormat::Json});
  Analysis a = load(req);
  EndsVerdict ends = ends_of(a.graph, a.bound);
  OrderedJson report;
  report["version"] = "report-v1";
  report["command"] = "ends";
  report["ends"] = ends_to_json(ends, a.graph);
  out = report.dump(2) + "\n";
  return ends.kind == EndsClass::Unknown ? kExitUnknownVerdict : kExitOk;
}

int run_certify(const AnalysisRequest& req, std::string& out) {
  require_format(req, {OutputFormat::Json, OutputFormat::Dot});
  Analysis a = load(req);
  if (a.graph.empty())
    throw InputError(
        "the empty graph (trivial group) has no certificate: leaves are "
        "vertices");
  Certificate cert = build_certificate(a.graph, a.bound);
  CheckReport check = check_certificate(a.graph, cert);
  if (!check.accepted)
    throw Error("internal error: generated certificate rejected at " +
                check.first_violation->path + " (" +
                check.first_violation->condition + ")");
  if (req.format == OutputFormat::Dot) {
    out = export_certificate_dot(cert, a.graph);
  } else {
    out = certificate_to_json(cert, a.graph).dump(2) + "\n";
  }
  return kExitOk;
}

int run_present(const AnalysisRequest& req, std::string& out) {
  require_format(req, {OutputFormat::Text});
  Analysis a = load(req);
  out = to_text(standard_presentation(a.graph));
  return kExitOk;
}

int run_oracle_ends(const AnalysisRequest& req, std::string& out) {
  require_format(req, {OutputFormat::Json});
  Analysis a = load(req);
  EndsEstimateResult r = estimate_ends(a.graph, req.inner, req.outer,
                                       req.stability, req.ball_cap);
  OrderedJson report;
  report["version"] = "report-v1";
  report["command"] = "oracle-ends";
  report["oracle_ends"] = ends_estimate_to_json(r);
  out = report.dump(2) + "\n";
  return r.verdict == EndsEstimate::Inconclusive ? kExitUnknownVerdict
                                                 : kExitOk;
}

int run_separators(const AnalysisRequest& req, std::string& out) {
  require_format(req, {OutputFormat::Json});
  Analysis a = load(req);
  auto seps = find_finite_complete_separators(a.graph, a.bound);
  OrderedJson report;
  report["version"] = "report-v1";
  report["command"] = "separators";
  report["separators"] = separators_to_json(seps, a.graph);
  out = report.dump(2) + "\n";
  return kExitOk;
}

}  // namespace

RunResult run(const AnalysisRequest& req) {
  RunResult result;
  try {
    switch (req.command) {
      case Command::Analyze:
        result.exit_code = run_analyze(req, result.out);
        break;
      case Command::Ends:
        result.exit_code = run_ends(req, result.out);
        break;
      case Command::Certify:
        result.exit_code = run_certify(req, result.out);
        break;
      case Command::Present:
        result.exit_code = run_present(req, result.out);
        break;
      case Command::OracleEnds:
        result.exit_code = run_oracle_ends(req, result.out);
        break;
      case Command::Separators:
        result.exit_code = run_separators(req, result.out);
        break;
    }
  } catch (const BoundExceededError& e) {
    result.exit_code = kExitBoundExceeded;
    result.out.clear();
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const UnknownVerdictError& e) {
    result.exit_code = kExitUnknownVerdict;
    result.out.clear();
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const InputError& e) {
    result.exit_code = kExitInputError;
    result.out.clear();
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exit_code = kExitInputError;
    result.out.clear();
    result.err = std::string("internal error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace gpa
