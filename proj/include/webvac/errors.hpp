#pragma once

#include <stdexcept>
#include <string>

namespace webvac {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// tableau validation
struct NotBijective : Error {
  using Error::Error;
};
struct NotIncreasing : Error {
  NotIncreasing(const std::string& msg, int row, int col)
      : Error(msg), row(row), col(col) {}
  int row;  // 1-based cell of the first violation
  int col;
};

// enumeration
struct BudgetExceeded : Error {
  using Error::Error;
};

// matchings
struct NotStandardRectangular : Error {
  using Error::Error;
};

// webs
struct DegenerateArrangement : Error {
  using Error::Error;
};
struct UnknownEdge : Error {
  using Error::Error;
};
struct MismatchedBoundary : Error {
  using Error::Error;
};
struct ConventionUnreachable : Error {
  using Error::Error;
};

// text formats and rendering
struct FormatError : Error {
  FormatError(const std::string& msg, int line) : Error(msg), line(line) {}
  int line;  // 1-based line of the offending input
};
struct UnsupportedKind : Error {
  using Error::Error;
};

}  // namespace webvac
