#include <algorithm>
#include <stdexcept>

#include "realgw/polynomial.hpp"

// Multivariate gcd over Q: monomial content is split off, then the main
// variable is eliminated with a primitive pseudo-remainder sequence whose
// coefficient contents are computed recursively in the remaining variables.

namespace realgw {

namespace {

Monomial monomial_content(const Poly& p) {
  Monomial m = p.leading().mono;
  for (const auto& t : p.terms())
    for (int i = 0; i < kMaxVars; ++i) m.exp[i] = std::min(m.exp[i], t.mono.exp[i]);
  return m;
}

Poly strip_monomial(const Poly& p, const Monomial& m) {
  if (m.total_degree() == 0) return p;
  std::vector<Term> t;
  t.reserve(p.size());
  for (const auto& x : p.terms()) t.push_back({x.mono / m, x.coef});
  return Poly::from_terms(p.nvars(), std::move(t));
}

// Coefficients of p as a polynomial in variable v.
std::vector<Poly> coefficients_in(const Poly& p, int v) {
  std::vector<std::vector<Term>> buckets(std::max(p.degree_in(v), 0) + 1);
  for (const auto& t : p.terms()) {
    Term c = t;
    c.mono.exp[v] = 0;
    buckets[t.mono.exp[v]].push_back(std::move(c));
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Poly::from_terms(p.nvars(), std::move(b)));
  return out;
}

Poly coefficient_in(const Poly& p, int v, int k) {
  std::vector<Term> c;
  for (const auto& t : p.terms())
    if (t.mono.exp[v] == k) {
      Term x = t;
      x.mono.exp[v] = 0;
      c.push_back(std::move(x));
    }
  return Poly::from_terms(p.nvars(), std::move(c));
}

Poly content_in(const Poly& p, int v) {
  auto cs = coefficients_in(p, v);
  Poly g(p.nvars());
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Poly primitive_part_in(const Poly& p, int v) {
  Poly c = content_in(p, v);
  if (c.is_constant()) return primitive(p);
  auto q = divide_exact(p, c);
  if (!q) throw std::logic_error("content does not divide polynomial");
  return primitive(*q);
}

Poly pseudo_remainder(const Poly& a, const Poly& b, int v) {
  int db = b.degree_in(v);
  Poly lb = coefficient_in(b, v, db);
  Poly r = a;
  while (!r.is_zero()) {
    int dr = r.degree_in(v);
    if (dr < db) break;
    Poly lr = coefficient_in(r, v, dr);
    Monomial shift;
    shift.exp[v] = static_cast<std::uint16_t>(dr - db);
    r = r * lb - (lr * b).mul_monomial(shift, 1);
  }
  return r;
}

// a, b primitive in v with positive v-degree.
Poly prs_gcd(Poly a, Poly b, int v) {
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (true) {
    Poly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) return b;
    if (r.degree_in(v) == 0) return Poly::constant(a.nvars(), 1);
    a = std::move(b);
    b = primitive_part_in(r, v);
  }
}

Poly gcd_core(const Poly& a, const Poly& b) {
  int n = a.nvars();
  if (b.size() <= a.size()) {
    if (divide_exact(a, b)) return primitive(b);
  } else if (divide_exact(b, a)) {
    return primitive(a);
  }

  int best = -1, best_deg = 0;
  for (int v = 0; v < n; ++v) {
    int da = a.degree_in(v), db = b.degree_in(v);
    if (da > 0 && db == 0) return gcd(content_in(a, v), b);
    if (db > 0 && da == 0) return gcd(a, content_in(b, v));
    if (da > 0 && db > 0) {
      int d = std::max(da, db);
      if (best < 0 || d < best_deg) {
        best = v;
        best_deg = d;
      }
    }
  }
  if (best < 0) return Poly::constant(n, 1);

  Poly ca = content_in(a, best), cb = content_in(b, best);
  Poly pa = ca.is_constant() ? a : *divide_exact(a, ca);
  Poly pb = cb.is_constant() ? b : *divide_exact(b, cb);
  Poly c = gcd(ca, cb);
  Poly g = prs_gcd(primitive(pa), primitive(pb), best);
  return primitive(c * g);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("variable context mismatch");
  int n = a.nvars();
  if (a.is_zero()) return primitive(b);
  if (b.is_zero()) return primitive(a);
  if (a.is_constant() || b.is_constant()) return Poly::constant(n, 1);

  Monomial ma = monomial_content(a), mb = monomial_content(b);
  Monomial mg;
  for (int i = 0; i < kMaxVars; ++i) mg.exp[i] = std::min(ma.exp[i], mb.exp[i]);
  Poly sa = strip_monomial(a, ma), sb = strip_monomial(b, mb);
  Poly mono = Poly::monomial(n, mg, 1);
  if (sa.is_constant() || sb.is_constant()) return mono;
  return primitive(gcd_core(sa, sb) * mono);
}

}  // namespace realgw
