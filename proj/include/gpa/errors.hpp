#ifndef GPA_ERRORS_HPP
#define GPA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gpa {

// Exit codes used by the CLI; library errors map onto them.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitUnknownVerdict = 2,
  kExitBoundExceeded = 3,
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input: bad JSON, unknown vertex names,
// invariant violations, missing presentation/table data.
class InputError : public Error {
 public:
  explicit InputError(const std::string& msg) : Error(msg) {}
};

// An operation that needs a definite verdict got Unknown.
class UnknownVerdictError : public Error {
 public:
  explicit UnknownVerdictError(const std::string& msg) : Error(msg) {}
};

// A configured resource bound was hit: separator vertex bound, Cayley ball
// cap, or certificate search exhaustion.
class BoundExceededError : public Error {
 public:
  explicit BoundExceededError(const std::string& msg) : Error(msg) {}
};

}  // namespace gpa

#endif
