#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "primediv/errors.hpp"
#include "primediv/int_polynomial.hpp"

namespace primediv {

namespace parse_detail {

struct Parser {
  std::string_view s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  bool at_end() {
    skip();
    return i >= s.size();
  }

  Int integer_literal() {
    skip();
    std::size_t start = i;
    std::string digits;
    if (i < s.size() && s[i] == '-') {
      digits.push_back('-');
      ++i;
    }
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
    if (digits.empty() || digits == "-") throw ParseError(start, "an integer");
    return Int(digits, 10);  // explicit base: leading zeros are not octal
  }

  uint64_t uint_literal() {
    skip();
    std::size_t start = i;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError(start, "an unsigned integer exponent");
    uint64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + static_cast<uint64_t>(s[i] - '0');
      if (v > 1'000'000) throw Error(Errc::LimitExceeded, "exponent too large");
      ++i;
    }
    return v;
  }

  IntPolynomial atom() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)))
      return IntPolynomial::constant(integer_literal());
    if (c == 'T') {
      ++i;
      return IntPolynomial::variable();
    }
    if (c == '(') {
      ++i;
      IntPolynomial e = expr();
      if (peek() != ')') throw ParseError(i, "')'");
      ++i;
      return e;
    }
    throw ParseError(i, "a coefficient, 'T', or '('");
  }

  IntPolynomial factor() {
    IntPolynomial a = atom();
    if (peek() == '^') {
      ++i;
      uint64_t e = uint_literal();
      if (a.degree() > 0 && e * static_cast<uint64_t>(a.degree()) > 100'000)
        throw Error(Errc::LimitExceeded, "resulting degree too large");
      IntPolynomial r{1};
      IntPolynomial base = a;
      while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
      }
      return r;
    }
    return a;
  }

  IntPolynomial term() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++i;
    }
    IntPolynomial acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++i;
        acc = acc * factor();
      } else if (c == 'T' || c == '(') {
        acc = acc * factor();  // juxtaposition: 2T, 2(T+1), (T+1)(T-2)
      } else {
        break;
      }
    }
    return neg ? -acc : acc;
  }

  IntPolynomial expr() {
    char c = peek();
    bool neg = false;
    if (c == '+' || c == '-') {
      neg = (c == '-');
      ++i;
    }
    IntPolynomial acc = term();
    if (neg) acc = -acc;
    while (true) {
      char op = peek();
      if (op != '+' && op != '-') break;
      ++i;
      IntPolynomial t = term();
      acc = (op == '+') ? acc + t : acc - t;
    }
    return acc;
  }

  IntPolynomial bracket_list() {
    if (peek() != '[') throw ParseError(i, "'['");
    ++i;
    std::vector<Int> coeffs;
    if (peek() == ']') {
      ++i;
      return IntPolynomial();
    }
    while (true) {
      coeffs.push_back(integer_literal());
      char c = peek();
      if (c == ',') {
        ++i;
        continue;
      }
      if (c == ']') {
        ++i;
        break;
      }
      throw ParseError(i, "',' or ']'");
    }
    return IntPolynomial(std::move(coeffs));
  }
};

}  // namespace parse_detail

/// Parses "T^3 - 2*T + 1", factored products like "(T+1)*(T-2)", or a
/// bracketed ascending coefficient list "[1, -2, 0, 1]".
inline IntPolynomial parse_poly(const std::string& text) {
  parse_detail::Parser p{text};
  IntPolynomial out;
  if (p.peek() == '[')
    out = p.bracket_list();
  else
    out = p.expr();
  if (!p.at_end()) throw ParseError(p.i, "end of input or an operator");
  return out;
}

/// A polynomial together with the text it was parsed from. Printing `parsed`
/// and reparsing always reproduces the same coefficient sequence.
struct PolyExpr {
  std::string source;
  IntPolynomial parsed;
};

inline PolyExpr parse_expr(const std::string& text) { return {text, parse_poly(text)}; }

}  // namespace primediv
