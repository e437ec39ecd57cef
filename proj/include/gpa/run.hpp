#ifndef GPA_RUN_HPP
#define GPA_RUN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gpa/oracle.hpp"

namespace gpa {

enum class Command { Analyze, Ends, Certify, Present, OracleEnds, Separators };
enum class OutputFormat { Json, Dot, Text };

struct AnalysisRequest {
  std::string input_path;
  std::optional<std::string> input_bytes;  // overrides input_path when set
  Command command = Command::Analyze;
  OutputFormat format = OutputFormat::Json;
  // Oracle parameters (oracle-ends only).
  int inner = 4;
  int outer = 12;
  int stability = 3;
  std::size_t ball_cap = kDefaultBallCap;
  std::optional<std::vector<std::string>> subgraph;  // restricts the analysis
  std::optional<int> max_vertices;  // else GPA_MAX_VERTICES, else default 24
};

struct RunResult {
  int exit_code = 0;
  std::string out;  // report bytes, byte-stable for identical input
  std::string err;  // diagnostics only
};

// Dispatches a request to the analysis modules. Exit codes: 0 definite
// result, 1 input error, 2 verdict unknown, 3 internal bound exceeded.
RunResult run(const AnalysisRequest& req);

}  // namespace gpa

#endif
