#include "realgw/rational_function.hpp"

#include <sstream>

namespace realgw {

RationalFunction::RationalFunction(int nvars) : num_(nvars), den_(Poly::constant(nvars, 1)) {}

RationalFunction::RationalFunction(int nvars, const Rational& c)
    : num_(Poly::constant(nvars, c)), den_(Poly::constant(nvars, 1)) {}

RationalFunction::RationalFunction(const Poly& num)
    : num_(num), den_(Poly::constant(num.nvars(), 1)) {}

RationalFunction::RationalFunction(Poly num, Poly den, bool)
    : num_(std::move(num)), den_(std::move(den)) {}

RationalFunction RationalFunction::fix_sign(Poly num, Poly den) {
  if (num.is_zero()) return RationalFunction(den.nvars());
  Rational c;
  Poly d = primitive(den, &c);
  if (c != 1) num = num * (1 / c);
  return RationalFunction(std::move(num), std::move(d), true);
}

RationalFunction RationalFunction::normalize(const Poly& num, const Poly& den) {
  if (num.nvars() != den.nvars()) throw std::invalid_argument("variable context mismatch");
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num.is_zero()) return RationalFunction(num.nvars());
  Poly g = gcd(num, den);
  if (g.is_constant()) return fix_sign(num, den);
  return fix_sign(*divide_exact(num, g), *divide_exact(den, g));
}

RationalFunction RationalFunction::variable(int nvars, int index) {
  return RationalFunction(Poly::variable(nvars, index));
}

std::optional<Rational> RationalFunction::as_constant() const {
  if (num_.is_constant() && den_.is_constant()) return num_.constant_value() / den_.constant_value();
  return std::nullopt;
}

void RationalFunction::check_same(const RationalFunction& o) const {
  if (nvars() != o.nvars()) throw std::invalid_argument("variable context mismatch");
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-num_, den_, true);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  check_same(o);
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return normalize(num_ + o.num_, den_);
  Poly g = gcd(den_, o.den_);
  if (g.is_constant()) return fix_sign(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  Poly b1 = *divide_exact(den_, g), d1 = *divide_exact(o.den_, g);
  Poly t = num_ * d1 + o.num_ * b1;
  if (t.is_zero()) return RationalFunction(nvars());
  Poly h = gcd(t, g);
  if (h.is_constant()) return fix_sign(std::move(t), b1 * o.den_);
  return fix_sign(*divide_exact(t, h), b1 * *divide_exact(o.den_, h));
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return RationalFunction(nvars());
  Poly a = num_, b = den_, c = o.num_, d = o.den_;
  Poly g1 = gcd(a, d);
  if (!g1.is_constant()) {
    a = *divide_exact(a, g1);
    d = *divide_exact(d, g1);
  }
  Poly g2 = gcd(c, b);
  if (!g2.is_constant()) {
    c = *divide_exact(c, g2);
    b = *divide_exact(b, g2);
  }
  return fix_sign(a * c, b * d);
}

RationalFunction RationalFunction::operator*(const Rational& c) const {
  if (sgn(c) == 0) return RationalFunction(nvars());
  return RationalFunction(num_ * c, den_, true);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("division by the zero function");
  return fix_sign(den_, num_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  check_same(o);
  return *this * o.inverse();
}

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return RationalFunction(nvars(), 1);
  // Powers of coprime polynomials stay coprime; Gauss keeps den primitive.
  return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), true);
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  Rational d = den_.evaluate(point);
  if (sgn(d) == 0) {
    std::ostringstream os;
    os << "denominator vanishes at (";
    for (std::size_t i = 0; i < point.size(); ++i) os << (i ? ", " : "") << point[i].get_str();
    os << ")";
    throw PoleError(os.str());
  }
  return num_.evaluate(point) / d;
}

namespace {

RationalFunction substitute(const Poly& p, std::span<const RationalFunction> images, int target) {
  RationalFunction sum(target);
  for (const auto& t : p.terms()) {
    RationalFunction v(target, t.coef);
    for (int i = 0; i < p.nvars(); ++i)
      if (t.mono.exp[i]) v = v * images[i].pow(t.mono.exp[i]);
    sum = sum + v;
  }
  return sum;
}

}  // namespace

RationalFunction RationalFunction::compose(std::span<const RationalFunction> images) const {
  if (static_cast<int>(images.size()) != nvars())
    throw std::invalid_argument("substitution length does not match variable count");
  int target = images.empty() ? nvars() : images[0].nvars();
  return substitute(num_, images, target) / substitute(den_, images, target);
}

std::optional<Rational> is_constant(const RationalFunction& f) { return f.as_constant(); }

}  // namespace realgw
