#include "realgw/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace realgw {

int Monomial::total_degree() const {
  int s = 0;
  for (auto e : exp) s += e;
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = exp[i] + other.exp[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = exp[i] - other.exp[i];
  return r;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.exp < b.exp;
}

namespace {

bool term_greater(const Term& a, const Term& b) { return grlex_less(b.mono, a.mono); }

// Sort descending and merge equal monomials, dropping zeros.
void canonicalize(std::vector<Term>& t) {
  std::sort(t.begin(), t.end(), term_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i + 1;
    Rational c = t[i].coef;
    while (j < t.size() && t[j].mono == t[i].mono) c += t[j++].coef;
    if (sgn(c) != 0) {
      t[out].mono = t[i].mono;
      t[out].coef = c;
      ++out;
    }
    i = j;
  }
  t.resize(out);
}

}  // namespace

Poly::Poly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("unsupported variable count");
}

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  if (sgn(c) != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index out of range");
  Monomial m;
  m.exp[index] = 1;
  return monomial(nvars, m, 1);
}

Poly Poly::monomial(int nvars, const Monomial& m, const Rational& c) {
  Poly p(nvars);
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(int nvars, std::vector<Term> terms) {
  Poly p(nvars);
  canonicalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.total_degree() == 0);
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.total_degree() == 0 && terms_[0].coef == 1;
}

int Poly::total_degree() const {
  return terms_.empty() ? -1 : terms_.front().mono.total_degree();
}

int Poly::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.mono.exp[var]);
  return d;
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return 0;
  const auto& last = terms_.back();
  return last.mono.total_degree() == 0 ? last.coef : Rational(0);
}

void Poly::check_same(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable context mismatch");
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  check_same(o);
  Poly r(nvars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && term_greater(terms_[i], o.terms_[j]))) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || term_greater(o.terms_[j], terms_[i])) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].coef + o.terms_[j].coef;
      if (sgn(c) != 0) r.terms_.push_back({terms_[i].mono, c});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  check_same(o);
  Poly r(nvars_);
  if (is_zero() || o.is_zero()) return r;
  if (o.terms_.size() == 1) return mul_monomial(o.terms_[0].mono, o.terms_[0].coef);
  if (terms_.size() == 1) return o.mul_monomial(terms_[0].mono, terms_[0].coef);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coef * b.coef});
  canonicalize(prod);
  r.terms_ = std::move(prod);
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r(nvars_);
  if (sgn(c) == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Poly Poly::mul_monomial(const Monomial& m, const Rational& c) const {
  Poly r(nvars_);
  if (sgn(c) == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the grlex order.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(nvars_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("assignment length does not match variable count");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (int i = 0; i < nvars_; ++i) {
      if (t.mono.exp[i] == 0) continue;
      mpq_class pw;
      mpz_pow_ui(pw.get_num_mpz_t(), point[i].get_num_mpz_t(), t.mono.exp[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), point[i].get_den_mpz_t(), t.mono.exp[i]);
      v *= pw;
    }
    sum += v;
  }
  return sum;
}

Poly Poly::compose(std::span<const Poly> images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw std::invalid_argument("substitution length does not match variable count");
  int target = images.empty() ? nvars_ : images[0].nvars();
  Poly sum(target);
  for (const auto& t : terms_) {
    Poly v = constant(target, t.coef);
    for (int i = 0; i < nvars_; ++i)
      if (t.mono.exp[i]) v = v * images[i].pow(t.mono.exp[i]);
    sum = sum + v;
  }
  return sum;
}

bool Poly::operator==(const Poly& o) const {
  if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coef != o.terms_[i].coef)
      return false;
  return true;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("variable context mismatch");
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  int n = a.nvars();
  if (a.is_zero()) return Poly(n);
  if (b.size() == 1) {
    const Term& lt = b.leading();
    for (const auto& t : a.terms())
      if (!lt.mono.divides(t.mono)) return std::nullopt;
    std::vector<Term> q;
    q.reserve(a.size());
    for (const auto& t : a.terms()) q.push_back({t.mono / lt.mono, t.coef / lt.coef});
    return Poly::from_terms(n, std::move(q));
  }
  if (a.total_degree() < b.total_degree()) return std::nullopt;
  for (int v = 0; v < n; ++v)
    if (a.degree_in(v) < b.degree_in(v)) return std::nullopt;

  const Term& lb = b.leading();
  std::vector<Term> quot;
  Poly r = a;
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    if (!lb.mono.divides(lr.mono)) return std::nullopt;
    Monomial qm = lr.mono / lb.mono;
    Rational qc = lr.coef / lb.coef;
    quot.push_back({qm, qc});
    r = r - b.mul_monomial(qm, qc);
  }
  return Poly::from_terms(n, std::move(quot));
}

Poly primitive(const Poly& p, Rational* factor) {
  if (p.is_zero()) {
    if (factor) *factor = 0;
    return p;
  }
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  if (sgn(p.leading().coef) < 0) c = -c;
  if (factor) *factor = c;
  if (c == 1) return p;
  Rational inv = 1 / c;
  return p * inv;
}

std::string variable_name(int nvars, int index) {
  if (nvars == 2) return index == 0 ? "x" : "y";
  return "x" + std::to_string(index + 1);
}

}  // namespace realgw
