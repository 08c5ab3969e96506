#pragma once

#include <stdexcept>
#include <string>

namespace trislice {

// Every failure mode in the library maps onto one of these categories.
// The CLI maps Usage to exit code 2 and everything else to exit code 1.
enum class ErrorKind {
  Width,         // element index outside the declared ground size
  Context,       // mixing objects with different ground sizes
  Arity,         // empty input where at least one element is required
  Parameter,     // value outside an operation's domain (nonprime modulus, ...)
  Duplication,   // an operation would create duplicate family members
  Order,         // input family not sorted as the operation requires
  Hypothesis,    // family violates a theorem's hypothesis
  Precondition,  // a stated lemma precondition does not hold
  Internal,      // an invariant the theory guarantees failed; a bug, surfaced loudly
  Parse,         // malformed textual input (profile string, JSONL, matrix dump)
  Io,            // filesystem failure
  Usage,         // bad command line
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace trislice
