#include "padyn/parse.hpp"

#include <cctype>

#include "padyn/error.hpp"

namespace padyn {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  IntPoly parse() {
    IntPoly result = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(pos_, what + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

  void check_degree(long long degree) const {
    if (degree > kMaxParsedDegree) fail("degree exceeds " + std::to_string(kMaxParsedDegree));
  }

  IntPoly expr() {
    IntPoly result = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        result += term();
      } else if (c == '-') {
        ++pos_;
        result -= term();
      } else {
        return result;
      }
    }
  }

  IntPoly term() {
    IntPoly result = unary();
    for (;;) {
      const char c = peek();
      IntPoly factor;
      if (c == '*') {
        ++pos_;
        factor = unary();
      } else if (c == 'x' || c == '(') {
        factor = power();
      } else if (is_digit(c)) {
        fail("expected an operator before number");
      } else {
        return result;
      }
      if (!result.is_zero() && !factor.is_zero()) check_degree(result.degree() + factor.degree());
      result *= factor;
    }
  }

  IntPoly unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  IntPoly power() {
    IntPoly base = primary();
    if (peek() != '^') return base;
    ++pos_;
    if (!is_digit(peek())) fail("exponent must be a nonnegative integer literal");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    const Integer exponent(std::string(text_.substr(start, pos_ - start)), 10);
    if (exponent > kMaxExponent) {
      pos_ = start;
      fail("exponent exceeds " + std::to_string(kMaxExponent));
    }
    if (peek() == '^') fail("chained exponent; use parentheses");
    const unsigned e = static_cast<unsigned>(exponent.get_ui());
    if (base.degree() > 0) check_degree(static_cast<long long>(base.degree()) * e);
    return base.pow(e);
  }

  IntPoly primary() {
    const char c = peek();
    if (is_digit(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      return IntPoly::constant(Integer(std::string(text_.substr(start, pos_ - start)), 10));
    }
    if (c == 'x') {
      ++pos_;
      return IntPoly::x();
    }
    if (c == '(') {
      ++pos_;
      IntPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string print_poly(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    const bool negative = c[i] < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Integer magnitude = abs(c[i]);
    if (i == 0 || magnitude != 1) out += magnitude.get_str();
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

}  // namespace padyn
