#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace realgw {

using Integer = mpz_class;
using Rational = mpq_class;

// Variables are the independent torus weights lambda_1, lambda_3, ...
// A space with m weights never needs more than this many slots.
inline constexpr int kMaxVars = 8;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  int total_degree() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Caller guarantees divisibility.
  Monomial operator/(const Monomial& other) const;
  bool operator==(const Monomial&) const = default;
};

// Graded lexicographic order, x1 > x2 > ... within a degree.
bool grlex_less(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rational coef;
};

// Sparse polynomial over Q in a fixed number of variables.  Terms are kept
// sorted by decreasing grlex order with no zero coefficients.
class Poly {
 public:
  explicit Poly(int nvars = 0);

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int index);
  static Poly monomial(int nvars, const Monomial& m, const Rational& c);
  // Terms in any order; duplicates are combined.
  static Poly from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  int total_degree() const;
  int degree_in(int var) const;
  const Term& leading() const { return terms_.front(); }
  Rational constant_value() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly mul_monomial(const Monomial& m, const Rational& c) const;
  Poly pow(unsigned e) const;

  Rational evaluate(std::span<const Rational> point) const;
  // Substitute polynomials for the variables.
  Poly compose(std::span<const Poly> images) const;

  bool operator==(const Poly& o) const;

 private:
  void check_same(const Poly& o) const;

  int nvars_;
  std::vector<Term> terms_;
};

// Exact quotient when b divides a, otherwise nullopt.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

// Scale so that coefficients are coprime integers and the leading
// coefficient is positive.  Returns the factor c with p = c * result.
Poly primitive(const Poly& p, Rational* factor = nullptr);

// Greatest common divisor in primitive form; gcd(0, q) = primitive(q).
Poly gcd(const Poly& a, const Poly& b);

// Variable names: x, y for two variables, x1..xm otherwise.
std::string variable_name(int nvars, int index);

}  // namespace realgw
