#ifndef CENTUN_ERRORS_HPP
#define CENTUN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace centun {

// Bad user input: unknown type, malformed or non-dominant weight, ...
struct UsageError : std::invalid_argument {
  explicit UsageError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A requested module exceeds the configured dimension cap.
struct SizeCapError : std::runtime_error {
  long dimension;
  long cap;
  SizeCapError(long dim, long cap_)
      : std::runtime_error("module dimension " + std::to_string(dim) +
                           " exceeds size cap " + std::to_string(cap_)),
        dimension(dim),
        cap(cap_) {}
};

// The request is well-formed but the mathematical situation it asks
// about does not arise (e.g. no counterexample exists in the type).
struct NotApplicableError : std::runtime_error {
  explicit NotApplicableError(const std::string& msg)
      : std::runtime_error(msg) {}
};

// Violated internal invariant; indicates a bug, never bad input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace centun

#endif
