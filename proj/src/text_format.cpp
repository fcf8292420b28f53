#include <cctype>
#include <sstream>

#include "realgw/rational_function.hpp"

namespace realgw {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coef;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;

    std::string mono;
    for (int i = 0; i < p.nvars(); ++i) {
      int e = t.mono.exp[i];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += variable_name(p.nvars(), i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty())
      os << c.get_str();
    else if (c == 1)
      os << mono;
    else
      os << c.get_str() << "*" << mono;
  }
  return os.str();
}

std::string to_string(const RationalFunction& f) {
  // Clear coefficient denominators of the numerator so both sides print
  // with integer coefficients.
  Integer l = 1;
  for (const auto& t : f.num().terms())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  Rational s(l);
  return "(" + to_string(f.num() * s) + ")/(" + to_string(f.den() * s) + ")";
}

namespace {

class Parser {
 public:
  Parser(int nvars, const std::string& text) : n_(nvars), s_(text) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + what +
                                " in \"" + s_ + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction r = term();
    while (true) {
      if (accept('+'))
        r = r + term();
      else if (accept('-'))
        r = r - term();
      else
        return r;
    }
  }

  RationalFunction term() {
    RationalFunction r = factor();
    while (true) {
      if (accept('*'))
        r = r * factor();
      else if (accept('/'))
        r = r / factor();
      else
        return r;
    }
  }

  RationalFunction factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    RationalFunction base = primary();
    if (accept('^')) {
      bool neg = accept('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      long e = std::stol(s_.substr(start, pos_ - start));
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  RationalFunction primary() {
    skip();
    if (accept('(')) {
      RationalFunction r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalFunction(n_, Rational(Integer(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      for (int i = 0; i < n_; ++i)
        if (name == variable_name(n_, i) || name == "x" + std::to_string(i + 1))
          return RationalFunction::variable(n_, i);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  int n_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(int nvars, const std::string& text) {
  return Parser(nvars, text).parse();
}

Poly parse_poly(int nvars, const std::string& text) {
  RationalFunction f = parse_rational_function(nvars, text);
  if (!f.den().is_one()) throw std::invalid_argument("not a polynomial: \"" + text + "\"");
  return f.num();
}

Rational parse_rational(const std::string& text) {
  auto c = parse_rational_function(0, text).as_constant();
  if (!c) throw std::invalid_argument("not a rational number: \"" + text + "\"");
  return *c;
}

}  // namespace realgw
