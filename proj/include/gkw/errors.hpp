#ifndef GKW_ERRORS_HPP
#define GKW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gkw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact evaluation at a zero of the denominator.
struct PoleError : Error {
  using Error::Error;
};

// Float evaluation where |den| underflows the guard threshold.
struct NearPoleError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line = 0;
  int column = 0;
  ParseError(const std::string& msg, int line_, int column_ = 0)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

struct DomainError : Error {
  using Error::Error;
};

// A recurrence cell was requested before its dependencies were filled.
struct MissingDependency : Error {
  using Error::Error;
};

// An identity the recurrence guarantees failed to hold; engine bug.
struct InternalInconsistency : Error {
  using Error::Error;
};

struct ZeroSum : Error {
  using Error::Error;
};

struct ConvergenceFailure : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

}  // namespace gkw

#endif
