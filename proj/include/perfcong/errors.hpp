#ifndef PERFCONG_ERRORS_HPP_
#define PERFCONG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace perfcong {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed group spec file or congruence/element string.
struct ParseError : Error {
  ParseError(std::string source, int line, const std::string& reason)
      : Error(source + ":" + std::to_string(line) + ": " + reason),
        source(std::move(source)),
        line(line) {}
  explicit ParseError(const std::string& reason) : Error(reason), line(0) {}
  std::string source;
  int line;
};

// A congruence triple failed one of its defining conditions.  The
// `condition` field carries a stable machine-readable tag, e.g.
// "not-normal", "not-invariant", "coset-shift-failed", "twist-failed".
struct ValidationError : Error {
  ValidationError(std::string condition, const std::string& detail)
      : Error(condition + ": " + detail), condition(std::move(condition)) {}
  std::string condition;
};

// Operation not available on the given backend.
struct UnsupportedBackend : Error {
  using Error::Error;
};

// Two routes that must agree disagreed.  Signals a bug, not bad input.
struct InternalInconsistency : Error {
  using Error::Error;
};

}  // namespace perfcong

#endif  // PERFCONG_ERRORS_HPP_
