#include <cctype>
#include <string>

#include "jetsolve/errors.hpp"
#include "jetsolve/polynomial.hpp"

namespace jetsolve {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

constexpr unsigned kMaxExponent = 1U << 16;

// expr    := ['+'|'-'] term (('+'|'-') term)*
// term    := factor ('*' factor)*
// factor  := ('+'|'-') factor | primary ['^' integer]
// primary := integer ['/' integer] | identifier ['[' integer (',' integer)* ']'] | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial result = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  Polynomial expression() {
    Polynomial sum = term();
    for (;;) {
      if (accept('+'))
        sum += term();
      else if (accept('-'))
        sum -= term();
      else
        return sum;
    }
  }

  Polynomial term() {
    Polynomial product = factor();
    for (;;) {
      if (accept('*')) {
        product *= factor();
        continue;
      }
      const char next = peek();
      if (is_digit(next) || is_ident_start(next) || next == '(') fail("implicit multiplication is not allowed");
      return product;
    }
  }

  Polynomial factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      const std::string digits = integer_literal("exponent");
      if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) fail("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string integer_literal(const char* what) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (is_digit(c)) {
      std::string literal = integer_literal("number");
      if (accept('/')) {
        skip_space();
        literal += "/" + integer_literal("denominator");
      }
      if (pos_ < text_.size() && is_ident_start(text_[pos_])) fail("implicit multiplication is not allowed");
      return Polynomial(parse_scalar(literal));
    }
    if (is_ident_start(c)) return Polynomial::variable(identifier());
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      name += '[';
      bool first = true;
      for (;;) {
        skip_space();
        if (!first) {
          if (accept(']')) break;
          if (!accept(',')) fail("expected ',' or ']' in index list");
          skip_space();
          name += ',';
        }
        first = false;
        const std::string digits = integer_literal("index");
        name += std::to_string(std::stoull(digits));
      }
      name += ']';
    }
    return name;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace jetsolve
