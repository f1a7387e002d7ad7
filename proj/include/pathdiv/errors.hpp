#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathdiv {

// Violated graph-domain precondition: self-loop, vertex not present,
// source equal to target, inconsistent roster.
class graph_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Structurally invalid data: bad matrix shape, roster too small.
class format_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Input text that does not match the line grammar. Carries the 1-based
// line number, and the column when the offending token is known.
class parse_error : public format_error {
public:
  parse_error(const std::string& what, std::size_t line, std::size_t column = 0)
      : format_error(render(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  static std::string render(const std::string& what, std::size_t line,
                            std::size_t column) {
    std::string where = "line " + std::to_string(line);
    if (column > 0) where += ", column " + std::to_string(column);
    return where + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

// Exhaustive-search guard tripped: the input is too large for the oracle.
class capacity_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace pathdiv
