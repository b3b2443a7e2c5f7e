#include "poly_parser.hpp"

#include <cctype>
#include <string>

#include "crfe/errors.hpp"

namespace crfe {

namespace {

class Parser {
 public:
  Parser(std::string_view s, int dim) : s_(s), dim_(dim) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    throw ParseError("polynomial literal, position " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      if (accept('+')) p += term();
      else if (accept('-')) p -= term();
      else return p;
    }
  }

  Polynomial term() {
    Polynomial p = unary();
    for (;;) {
      if (accept('*')) {
        p = p * unary();
      } else if (accept('/')) {
        const Polynomial q = unary();
        if (q.degree() > 0) error("division by a non-constant");
        const Rational c = q.coefficient(Exponent{});
        if (c == 0) error("division by zero");
        p *= Rational(1) / c;
      } else {
        return p;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("expected an exponent");
      if (pos_ - start > 3) error("exponent too large");
      const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      if (e > 64) error("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= s_.size()) error("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) error("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Polynomial::constant(dim_, parse_rational(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return variable(s_.substr(start, pos_ - start));
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  Polynomial variable(std::string_view name) {
    int index = -1;
    if (name == "x") index = 0;
    else if (name == "y") index = 1;
    else if (name == "z") index = 2;
    else if (name == "w") index = 3;
    else if (name.size() >= 2 && name.size() <= 3 && name[0] == 'x' &&
             name.find_first_not_of("0123456789", 1) == std::string_view::npos)
      index = std::stoi(std::string(name.substr(1)));
    if (index < 0) error("unknown variable '" + std::string(name) + "'");
    if (index >= dim_) error("variable '" + std::string(name) + "' exceeds dimension " + std::to_string(dim_));
    return Polynomial::variable(dim_, index);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int dim_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int dim) { return Parser(text, dim).parse(); }

}  // namespace crfe
