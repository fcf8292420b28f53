#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "realgw/graphs.hpp"
#include "realgw/psi.hpp"
#include "realgw/rational_function.hpp"

namespace realgw {

// How non-separable loci enter the signed sum.
//   kDegreeParity: factor (-1)^{d/2}; the multiplicity divisor also includes
//                  the degrees of the spine edges.
//   kUniform:      factor -1; divisor is the product of tree edge degrees.
enum class NodeConvention { kDegreeParity, kUniform };

std::string to_string(NodeConvention c);
NodeConvention parse_convention(const std::string& s);

int nonseparable_sign(NodeConvention c, int degree);
// D: d01*d02*prod d_e for separable halves, see NodeConvention otherwise.
Integer multiplicity_divisor(const HalfGraph& g, NodeConvention c);

// Torus weights as exact rational functions in the independent variables.
struct SymbolicWeights {
  using Field = RationalFunction;
  SpaceSpec space;

  Field lambda(int label) const {
    return RationalFunction::variable(space.m, space.weight_index(label)) *
           Rational(space.weight_sign(label));
  }
  Field constant(const Rational& c) const { return RationalFunction(space.m, c); }
};

// Plain rational with division by zero reported as a PoleError.
struct CheckedRational {
  Rational v;

  CheckedRational() = default;
  CheckedRational(const Rational& x) : v(x) {}

  CheckedRational operator+(const CheckedRational& o) const { return Rational(v + o.v); }
  CheckedRational operator-(const CheckedRational& o) const { return Rational(v - o.v); }
  CheckedRational operator-() const { return Rational(-v); }
  CheckedRational operator*(const CheckedRational& o) const { return Rational(v * o.v); }
  CheckedRational operator*(const Rational& o) const { return Rational(v * o); }
  CheckedRational operator/(const CheckedRational& o) const {
    if (sgn(o.v) == 0) throw PoleError("weight substitution hits a pole");
    return Rational(v / o.v);
  }
  bool operator==(const CheckedRational& o) const { return v == o.v; }
};

// Torus weights substituted by numbers before any arithmetic.
struct NumericWeights {
  using Field = CheckedRational;
  SpaceSpec space;
  std::vector<Rational> point;

  Field lambda(int label) const {
    return Rational(space.weight_sign(label) * point.at(space.weight_index(label)));
  }
  Field constant(const Rational& c) const { return c; }
};

namespace local {

template <class W>
typename W::Field power(const W& ws, const typename W::Field& base, int e) {
  using F = typename W::Field;
  F r = ws.constant(1);
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

// prod_{j != i} (lambda_i - lambda_j)
template <class W>
typename W::Field point_factor(const W& ws, int i) {
  using F = typename W::Field;
  F r = ws.constant(1);
  F li = ws.lambda(i);
  for (int j = 1; j <= ws.space.num_labels(); ++j)
    if (j != i) r = r * (li - ws.lambda(j));
  return r;
}

template <class W>
typename W::Field edge_factor(const W& ws, int j1, int j2, int d) {
  using F = typename W::Field;
  if (j1 == j2) throw std::invalid_argument("edge joins coincident labels");
  if (d < 1) throw std::invalid_argument("edge degree below one");
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), d);
  Integer dpow;
  mpz_ui_pow_ui(dpow.get_mpz_t(), d, 2 * d);
  Rational c(fact * fact, dpow);
  c.canonicalize();
  if (d % 2) c = -c;
  F l1 = ws.lambda(j1), l2 = ws.lambda(j2);
  F r = power(ws, F(l1 - l2), 2 * d) * c;
  for (int s = 0; s <= d; ++s) {
    F p = (l1 * Rational(s) + l2 * Rational(d - s)) * Rational(1, d);
    for (int k = 1; k <= ws.space.num_labels(); ++k)
      if (k != j1 && k != j2) r = r * (p - ws.lambda(k));
  }
  return r;
}

template <class W>
typename W::Field halfedge_factor(const W& ws, int i, int d0) {
  using F = typename W::Field;
  if (d0 < 1) throw std::invalid_argument("half-edge degree below one");
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), d0);
  F li = ws.lambda(i);
  F base = ws.constant(Rational(d0)) / (li * Rational(2));
  F r = power(ws, base, d0) * Rational(Integer(1), fact);
  F den = ws.constant(1);
  for (int j = 1; j <= ws.space.num_labels(); ++j) {
    if (j == i || (i + j) % 2) continue;
    for (int s = 0; s <= d0; ++s) {
      Rational c(d0 - 2 * s, d0);
      c.canonicalize();
      den = den * (li * c - ws.lambda(j));
    }
  }
  return r / den;
}

struct FlagRef {
  int vertex;
  int label;      // label of the vertex
  int far_label;  // label at the other end (conjugate for a half-edge)
  int degree;
};

// Flags of the bare half: both ends of every tree edge plus the central
// half-edge flags of a separable half.
inline std::vector<FlagRef> flags(const SpaceSpec& space, const HalfGraph& g) {
  std::vector<FlagRef> out;
  for (const auto& e : g.edges) {
    out.push_back({e.u, g.labels[e.u], g.labels[e.v], e.degree});
    out.push_back({e.v, g.labels[e.v], g.labels[e.u], e.degree});
  }
  if (g.kind == GraphKind::kSeparable)
    for (const auto& h : g.half_edges) {
      int l = g.labels[h.vertex];
      out.push_back({h.vertex, l, conjugate_label(space, l), h.degree});
    }
  return out;
}

template <class W>
typename W::Field flag_weight(const W& ws, const FlagRef& f) {
  return (ws.lambda(f.label) - ws.lambda(f.far_label)) * Rational(1, f.degree);
}

// Contracted-component factor for a vertex with the given flag weights.
template <class W>
typename W::Field vertex_term(const W& ws, const std::vector<typename W::Field>& w) {
  using F = typename W::Field;
  if (w.size() == 1) return w[0];
  if (w.size() == 2) return ws.constant(1) / (w[0] + w[1]);
  return vertex_factor<F>(std::span<const F>(w), ws.constant(1));
}

template <class W>
typename W::Field graph_euler_inverse(const W& ws, const HalfGraph& g, int nonsep_sign) {
  using F = typename W::Field;
  const SpaceSpec& space = ws.space;
  validate(space, g);
  auto fl = flags(space, g);
  int n = g.num_vertices();
  bool ns = g.kind == GraphKind::kNonSeparable;

  std::vector<std::vector<F>> at(n);
  for (const auto& f : fl) at[f.vertex].push_back(flag_weight(ws, f));
  if (ns) {
    // Closing flag of p0 along the conjugate of the edge ending at p0_bar.
    int u = g.p0_bar_neighbor();
    FlagRef close{g.p0, g.labels[g.p0], conjugate_label(space, g.labels[u]), g.p0_bar_degree()};
    at[g.p0].push_back(flag_weight(ws, close));
  }

  F r = ws.constant(1);
  // Vertex factors, then point factors; p0_bar is not counted.
  for (int v = 0; v < n; ++v) {
    if (ns && v == g.p0_bar) continue;
    if (at[v].empty()) throw std::invalid_argument("malformed graph: isolated vertex");
    r = r * vertex_term(ws, at[v]);
  }
  for (int v = 0; v < n; ++v) {
    if (ns && v == g.p0_bar) continue;
    r = r / point_factor(ws, g.labels[v]);
  }
  for (const auto& f : fl) r = r * point_factor(ws, f.label);
  for (const auto& e : g.edges) r = r / edge_factor(ws, g.labels[e.u], g.labels[e.v], e.degree);
  if (!ns) {
    for (const auto& h : g.half_edges) r = r * halfedge_factor(ws, g.labels[h.vertex], h.degree);
  } else {
    r = r * Rational(nonsep_sign);
  }
  return r;
}

template <class W>
typename W::Field insertion_factor(const W& ws, const HalfGraph& g, int t, int ell) {
  using F = typename W::Field;
  if (t % 2 == 0) throw std::invalid_argument("insertion exponent must be odd");
  if (ell < 0) throw std::invalid_argument("negative pair count");
  F s = ws.constant(0);
  for (const auto& f : flags(ws.space, g))
    s = s + power(ws, ws.lambda(f.label), t) / flag_weight(ws, f);
  return power(ws, s, ell);
}

}  // namespace local

RationalFunction edge_factor(const SpaceSpec& space, int j1, int j2, int d);
RationalFunction halfedge_factor(const SpaceSpec& space, int i, int d0);
RationalFunction graph_euler_inverse(const SpaceSpec& space, const HalfGraph& g, int nonsep_sign = -1);
RationalFunction insertion_factor(const SpaceSpec& space, const HalfGraph& g, int t, int ell);

}  // namespace realgw
