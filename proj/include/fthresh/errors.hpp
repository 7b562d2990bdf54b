#ifndef FTHRESH_ERRORS_HPP
#define FTHRESH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fthresh {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mixing values from different ring contexts.
struct ContextError : Error {
  using Error::Error;
};

// Invalid argument to an operation (bad exponent, zero divisor ideal, ...).
struct ArgumentError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, int line, int col)
      : Error(msg + " at line " + std::to_string(line) + ", column " +
              std::to_string(col)),
        line(line),
        col(col) {}
  int line;
  int col;
};

// hilbertFunction auto mode on a quotient that is not Artinian.
struct NotArtinianError : Error {
  using Error::Error;
};

// The ring is not F-split at the requested level e.
struct NotSplitError : Error {
  using Error::Error;
};

// A caller-facing precondition failed (e.g. ring not F-pure).
struct PreconditionError : Error {
  using Error::Error;
};

// Requested computation exceeds the configured cell budget.
struct BudgetError : Error {
  using Error::Error;
};

// bettiTable on a complex with unit entries.
struct MinimalityError : Error {
  using Error::Error;
};

// The exhaustive linear-form search over F_p ran out of candidates. The
// underlying theorem assumes an infinite field; small fields can fail.
struct FieldTooSmallError : Error {
  using Error::Error;
};

// A theorem-backed internal invariant failed: engine bug.
struct InvariantViolation : Error {
  using Error::Error;
};

}  // namespace fthresh

#endif
