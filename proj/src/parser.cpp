#include "ratrec/parser.hpp"

#include "ratrec/errors.hpp"

#include <cctype>
#include <string>

namespace ratrec {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MultiPoly equation() {
    MultiPoly lhs = expr();
    skip_space();
    if (peek() == '=') {
      ++pos_;
      lhs -= expr();
    }
    skip_space();
    if (pos_ < text_.size()) fail_syntax("unexpected '" + std::string(1, text_[pos_]) + "'");
    return lhs;
  }

 private:
  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      if (c == '+') {
        acc += term();
      } else {
        acc -= term();
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      skip_space();
      if (peek() != '*') return acc;
      ++pos_;
      acc *= factor();
    }
  }

  MultiPoly factor() {
    skip_space();
    const char c = peek();
    if (c == '-' || c == '+') {
      ++pos_;
      MultiPoly f = factor();
      return c == '-' ? -f : f;
    }
    MultiPoly base = atom();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      base = base.pow(static_cast<unsigned>(unsigned_literal("exponent")));
    }
    return base;
  }

  MultiPoly atom() {
    skip_space();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly(rational_literal());
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      const std::string name = identifier();
      if (name == "n") return var_n();
      if (name == "s") return shift_atom();
      throw UnknownSymbol("unknown symbol '" + name + "'", start);
    }
    if (c == '\0') fail_syntax("unexpected end of input");
    fail_syntax("unexpected '" + std::string(1, c) + "'");
  }

  // After "s": "(n)", "(n+k)"; "(n-k)" is rejected.
  MultiPoly shift_atom() {
    expect('(');
    skip_space();
    const std::size_t at = pos_;
    const std::string name = identifier();
    if (name.empty()) fail_syntax("expected 'n'");
    if (name != "n") throw UnknownSymbol("unknown symbol '" + name + "'", at);
    skip_space();
    std::uint32_t k = 0;
    if (peek() == '+') {
      ++pos_;
      skip_space();
      k = static_cast<std::uint32_t>(unsigned_literal("shift"));
    } else if (peek() == '-') {
      throw NegativeShiftError("negative shift s(n-k) is not allowed", pos_);
    }
    expect(')');
    return var_s(k);
  }

  Rational rational_literal() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail_syntax("expected denominator");
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    const std::string_view lit = text_.substr(start, pos_ - start);
    try {
      return parse_rational(lit);
    } catch (const std::invalid_argument&) {
      throw SyntaxError("invalid rational literal '" + std::string(lit) + "'", start);
    }
  }

  unsigned long unsigned_literal(const char* what) {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail_syntax(std::string("expected nonnegative integer ") + what);
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) throw SyntaxError(std::string(what) + " too large", start);
    return std::stoul(digits);
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail_syntax(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail_syntax(const std::string& msg) const { throw SyntaxError(msg, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

DiffPoly parse_equation(std::string_view text) { return DiffPoly(Parser(text).equation()); }

}  // namespace ratrec
