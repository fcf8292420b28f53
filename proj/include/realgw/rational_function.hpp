#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "realgw/polynomial.hpp"

namespace realgw {

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Quotient num/den kept in canonical form: coprime, den primitive over Z
// with positive grlex-leading coefficient.  Values are immutable in use.
class RationalFunction {
 public:
  explicit RationalFunction(int nvars = 0);
  RationalFunction(int nvars, const Rational& c);
  explicit RationalFunction(const Poly& num);

  // Normalizes; throws std::domain_error on a zero denominator.
  static RationalFunction normalize(const Poly& num, const Poly& den);
  static RationalFunction variable(int nvars, int index);

  int nvars() const { return num_.nvars(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  std::optional<Rational> as_constant() const;

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator*(const Rational& c) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction inverse() const;
  RationalFunction pow(long e) const;

  // Throws PoleError naming the point when the denominator vanishes.
  Rational evaluate(std::span<const Rational> point) const;
  RationalFunction compose(std::span<const RationalFunction> images) const;

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

 private:
  RationalFunction(Poly num, Poly den, bool);  // already canonical
  static RationalFunction fix_sign(Poly num, Poly den);
  void check_same(const RationalFunction& o) const;

  Poly num_;
  Poly den_;
};

std::optional<Rational> is_constant(const RationalFunction& f);

std::string to_string(const Poly& p);
std::string to_string(const RationalFunction& f);
std::string to_string(const Rational& q);
// Accepts "(P)/(P)", "(P)" or a bare polynomial P with integer or a/b
// coefficients and variables named as in variable_name.
RationalFunction parse_rational_function(int nvars, const std::string& text);
Poly parse_poly(int nvars, const std::string& text);
Rational parse_rational(const std::string& text);

}  // namespace realgw
