#include "realgw/psi.hpp"

namespace realgw {

namespace {

Integer factorial(int k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

void compose_rec(int n, int sum, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(sum);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = sum; k >= 0; --k) {
    cur.push_back(k);
    compose_rec(n, sum - k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Rational psi_integral(std::span<const int> a) {
  int n = static_cast<int>(a.size());
  if (n < 3) throw std::invalid_argument("vertex moduli is a point; no psi integral");
  int s = 0;
  for (int x : a) {
    if (x < 0) throw std::invalid_argument("negative psi exponent");
    s += x;
  }
  if (s != n - 3) return 0;
  Integer den = 1;
  for (int x : a) den *= factorial(x);
  Rational r(factorial(n - 3), den);
  r.canonicalize();
  return r;
}

std::vector<std::vector<int>> compositions(int n, int sum) {
  std::vector<std::vector<int>> out;
  if (n <= 0) return out;
  std::vector<int> cur;
  compose_rec(n, sum, cur, out);
  return out;
}

RationalFunction vertex_factor(std::span<const RationalFunction> w) {
  if (w.size() < 3) throw std::invalid_argument("vertex moduli is a point; no psi integral");
  return vertex_factor<RationalFunction>(w, RationalFunction(w[0].nvars(), 1));
}

}  // namespace realgw
