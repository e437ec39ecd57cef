// gpa: analyze graph products of groups described by annotated graphs.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gpa/run.hpp"

namespace {

gpa::OutputFormat parse_format(const std::string& s, gpa::Command cmd) {
  if (s.empty())  // per-command default
    return cmd == gpa::Command::Present ? gpa::OutputFormat::Text
                                        : gpa::OutputFormat::Json;
  if (s == "json") return gpa::OutputFormat::Json;
  if (s == "dot") return gpa::OutputFormat::Dot;
  return gpa::OutputFormat::Text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph product semistability and ends analyzer"};
  app.require_subcommand(1);

  gpa::AnalysisRequest req;
  std::string format;
  std::vector<std::string> subgraph;

  auto add_common = [&](CLI::App* cmd, const char* format_help) {
    cmd->add_option("input", req.input_path, "graph description JSON file")
        ->required();
    cmd->add_option("--format", format, format_help);
    cmd->add_option("--subgraph", subgraph,
                    "restrict the analysis to the full subgraph on these "
                    "vertices (comma separated)")
        ->delimiter(',');
    cmd->add_option("--max-vertices", req.max_vertices,
                    "separator/vertex bound (default 24, or GPA_MAX_VERTICES)");
  };

  auto* analyze = app.add_subcommand(
      "analyze", "ends + semistability verdicts with an attached certificate");
  add_common(analyze, "output format (json)");
  auto* ends = app.add_subcommand("ends", "number-of-ends classification");
  add_common(ends, "output format (json)");
  auto* certify =
      app.add_subcommand("certify", "build and check a semistability certificate");
  add_common(certify, "output format (json|dot)");
  auto* present = app.add_subcommand(
      "present", "standard presentation of the graph product");
  add_common(present, "output format (text)");
  auto* oracle = app.add_subcommand(
      "oracle-ends", "empirical end counting on the Cayley ball (needs tables)");
  add_common(oracle, "output format (json)");
  oracle->add_option("--inner", req.inner, "inner ball radius")->default_val(4);
  oracle->add_option("--outer", req.outer, "outer ball radius")->default_val(12);
  oracle->add_option("--stability", req.stability,
                     "consecutive stable radii required")
      ->default_val(3);
  oracle->add_option("--ball-cap", req.ball_cap, "max ball elements")
      ->default_val(gpa::kDefaultBallCap);
  auto* separators = app.add_subcommand(
      "separators", "enumerate finite complete separating subgraphs");
  add_common(separators, "output format (json)");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) req.command = gpa::Command::Analyze;
  if (ends->parsed()) req.command = gpa::Command::Ends;
  if (certify->parsed()) req.command = gpa::Command::Certify;
  if (present->parsed()) req.command = gpa::Command::Present;
  if (oracle->parsed()) req.command = gpa::Command::OracleEnds;
  if (separators->parsed()) req.command = gpa::Command::Separators;
  req.format = parse_format(format, req.command);
  if (!subgraph.empty()) req.subgraph = subgraph;

  gpa::RunResult result = gpa::run(req);
  if (!result.out.empty()) std::fwrite(result.out.data(), 1, result.out.size(), stdout);
  if (!result.err.empty()) std::fwrite(result.err.data(), 1, result.err.size(), stderr);
  return result.exit_code;
}
