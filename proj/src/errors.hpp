#pragma once

#include <stdexcept>
#include <string>

namespace cpslint {

// Source position, 1-based. {0,0} means "no position".
struct Pos {
  int line = 0;
  int col = 0;
};

enum class ErrorKind {
  Syntax,           // malformed script text
  Regex,            // non-compiling regular expression in a script
  Structure,        // action ordering / multiplicity violations
  Semantic,         // validator-level problem surfaced as an error
  Io,               // file system failure
  CsvFormat,        // input CSV not readable under the requested policy
  Runtime,          // execution-time failure (bad column reference, ...)
  Type,             // ordering comparator met a non-numeric column
  Contract,         // engine ordering bug (range before type enforcement)
  AllMissing,       // imputation requested on a column with no values
  ColumnNotFound,   // explicit column name does not exist in the table
  InsufficientRows, // corruption blocks do not fit the table
};

class CpsError : public std::runtime_error {
public:
  CpsError(ErrorKind kind, std::string message, Pos pos = {})
      : std::runtime_error(std::move(message)), kind_(kind), pos_(pos) {}

  ErrorKind kind() const { return kind_; }
  Pos pos() const { return pos_; }

  // "line:col: message" when a position is attached.
  std::string to_string() const {
    if (pos_.line > 0) {
      return std::to_string(pos_.line) + ":" + std::to_string(pos_.col) +
             ": " + what();
    }
    return what();
  }

private:
  ErrorKind kind_;
  Pos pos_;
};

} // namespace cpslint
