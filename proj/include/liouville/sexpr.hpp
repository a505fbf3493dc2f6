#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "liouville/closed_set.hpp"

namespace liouville {

// Malformed text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// Well-formed text whose construction violates a set invariant; message()
// names the invariant.
class SemanticError : public std::runtime_error {
 public:
  SemanticError(const std::string& message, std::size_t line, std::size_t column);

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// expr := (empty) | (points r+) | (interval r r) | (ray left|right r)
//       | (tower r r r expr) | (cantor r r) | (sliouville) | (union expr+)
//       | (affine r r expr)
// r    := integer | integer/positive-integer
ClosedSet parse_set_expr(std::string_view text);

// Parses a rational literal in the same syntax; throws ParseError at column 1.
Rational parse_rational_literal(std::string_view text);

}  // namespace liouville
