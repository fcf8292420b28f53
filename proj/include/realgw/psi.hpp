#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "realgw/rational_function.hpp"

namespace realgw {

// Genus-zero descendant integral over the moduli of n-pointed rational
// curves: (n-3)!/prod a_i! when sum a_i = n-3, zero otherwise.
Rational psi_integral(std::span<const int> a);

// All exponent vectors of length n with the given sum, lexicographically.
std::vector<std::vector<int>> compositions(int n, int sum);

// Integral of prod (w_i - psi_i)^{-1} over the vertex moduli, expanded as
// sum_a psi_integral(a) prod w_i^{-(a_i+1)}.  Works for any field type with
// the usual operators; `one` fixes the field instance.
template <class Field>
Field vertex_factor(std::span<const Field> w, const Field& one) {
  int n = static_cast<int>(w.size());
  if (n < 3) throw std::invalid_argument("vertex moduli is a point; no psi integral");
  const Field zero = one - one;
  std::vector<Field> inv;
  inv.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (w[i] == zero) throw std::domain_error("zero weight at flag " + std::to_string(i));
    inv.push_back(one / w[i]);
  }
  Field base = one;
  for (const auto& u : inv) base = base * u;
  Field sum = zero;
  for (const auto& a : compositions(n, n - 3)) {
    Field term = base * psi_integral(a);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < a[i]; ++k) term = term * inv[i];
    sum = sum + term;
  }
  return sum;
}

RationalFunction vertex_factor(std::span<const RationalFunction> w);

}  // namespace realgw
