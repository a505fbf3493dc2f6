#include "liouville/sexpr.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace liouville {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

SemanticError::SemanticError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("semantic error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

// Digits with an optional sign and an optional "/positive" part; nullopt
// when the word is not of that shape.
std::optional<Rational> rational_from_word(std::string_view word) {
  std::size_t i = 0;
  if (i < word.size() && (word[i] == '-' || word[i] == '+')) ++i;
  const std::size_t digits_start = i;
  while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) ++i;
  if (i == digits_start) return std::nullopt;
  if (i == word.size()) return Rational(Integer(std::string(word[0] == '+' ? word.substr(1) : word), 10));
  if (word[i] != '/') return std::nullopt;
  const std::size_t den_start = ++i;
  while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) ++i;
  if (i == den_start || i != word.size()) return std::nullopt;
  Integer den(std::string(word.substr(den_start)), 10);
  if (den == 0) return std::nullopt;
  const std::string_view num = word.substr(0, den_start - 1);
  return Rational(Integer(std::string(num[0] == '+' ? num.substr(1) : num), 10), den);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ClosedSet parse_all() {
    ClosedSet e = parse_expr();
    skip_space();
    if (!at_end()) fail("unexpected text after expression");
    return e;
  }

 private:
  bool at_end() const { return offset_ >= text_.size(); }
  char peek() const { return text_[offset_]; }

  void advance() {
    if (text_[offset_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++offset_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_.line, pos_.column); }
  [[noreturn]] static void fail_at(const std::string& message, Position at) {
    throw ParseError(message, at.line, at.column);
  }

  void expect(char c) {
    skip_space();
    if (at_end()) fail(std::string("expected '") + c + "' but input ended");
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  bool next_is(char c) {
    skip_space();
    return !at_end() && peek() == c;
  }

  // A maximal run of characters other than whitespace and parentheses.
  std::string_view word(Position& at) {
    skip_space();
    at = pos_;
    const std::size_t start = offset_;
    while (!at_end() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != '(' && peek() != ')') {
      advance();
    }
    return text_.substr(start, offset_ - start);
  }

  Rational rational() {
    Position at;
    const std::string_view w = word(at);
    if (w.empty()) fail_at(at_end() ? "expected a rational but input ended" : "expected a rational", at);
    auto r = rational_from_word(w);
    if (!r) fail_at("malformed rational '" + std::string(w) + "'", at);
    return *r;
  }

  ClosedSet parse_expr() {
    skip_space();
    if (at_end()) fail("expected '(' but input ended");
    if (peek() != '(') fail("expected '('");
    const Position open = pos_;
    advance();
    Position head_at;
    const std::string head(word(head_at));
    if (head.empty()) fail_at("expected an expression keyword", head_at);

    try {
      ClosedSet e = parse_body(head, head_at);
      expect(')');
      return e;
    } catch (const InvalidSet& err) {
      throw SemanticError(err.what(), open.line, open.column);
    }
  }

  ClosedSet parse_body(const std::string& head, Position head_at) {
    if (head == "empty") return ClosedSet::empty();
    if (head == "sliouville") return ClosedSet::sliouville();
    if (head == "points") {
      std::vector<Rational> pts;
      do {
        pts.push_back(rational());
      } while (!next_is(')') && !at_end());
      return ClosedSet::points(std::move(pts));
    }
    if (head == "interval") {
      Rational a = rational();
      Rational b = rational();
      return ClosedSet::interval(std::move(a), std::move(b));
    }
    if (head == "cantor") {
      Rational a = rational();
      Rational b = rational();
      return ClosedSet::cantor(std::move(a), std::move(b));
    }
    if (head == "ray") {
      Position at;
      const std::string_view dir = word(at);
      RayDirection d;
      if (dir == "left") {
        d = RayDirection::kLeft;
      } else if (dir == "right") {
        d = RayDirection::kRight;
      } else {
        fail_at("ray direction must be 'left' or 'right'", at);
      }
      return ClosedSet::ray(d, rational());
    }
    if (head == "tower") {
      Rational limit = rational();
      Rational scale = rational();
      Rational ratio = rational();
      ClosedSet child = parse_expr();
      return ClosedSet::tower(std::move(limit), std::move(scale), std::move(ratio), std::move(child));
    }
    if (head == "union") {
      std::vector<ClosedSet> parts;
      do {
        parts.push_back(parse_expr());
      } while (!next_is(')') && !at_end());
      return ClosedSet::union_of(std::move(parts));
    }
    if (head == "affine") {
      Rational slope = rational();
      Rational offset = rational();
      ClosedSet child = parse_expr();
      return ClosedSet::affine(AffineMap::make(std::move(slope), std::move(offset)), std::move(child));
    }
    fail_at("unknown expression keyword '" + head + "'", head_at);
  }

  std::string_view text_;
  std::size_t offset_ = 0;
  Position pos_;
};

}  // namespace

ClosedSet parse_set_expr(std::string_view text) { return Parser(text).parse_all(); }

Rational parse_rational_literal(std::string_view text) {
  auto r = rational_from_word(text);
  if (!r) throw ParseError("malformed rational '" + std::string(text) + "'", 1, 1);
  return *r;
}

}  // namespace liouville
