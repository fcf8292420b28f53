#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "realgw/localization.hpp"

using namespace realgw;

namespace {

const SpaceSpec P3{2};
const SpaceSpec P1{1};

RationalFunction rf(const std::string& s, int n = 2) { return parse_rational_function(n, s); }

HalfGraph sep_d2(int label) {
  HalfGraph g;
  g.labels = {label};
  g.half_edges = {HalfEdge{0, 1}, HalfEdge{0, 1}};
  return g;
}

HalfGraph nonsep_d2(int label) {
  HalfGraph g;
  g.kind = GraphKind::kNonSeparable;
  g.labels = {label, conjugate_label(P3, label)};
  g.edges = {{0, 1, 1}};
  g.p0 = 0;
  g.p0_bar = 1;
  return g;
}

bool homogeneous(const Poly& p) {
  if (p.is_zero()) return true;
  int d = p.terms().front().mono.total_degree();
  for (const auto& t : p.terms())
    if (t.mono.total_degree() != d) return false;
  return true;
}

// x_k -> sign_k * x_k, realized on labels by conjugating every label in pair k.
HalfGraph flip_pairs(const SpaceSpec& s, const HalfGraph& g, const std::vector<int>& signs) {
  HalfGraph r = g;
  for (auto& l : r.labels)
    if (signs[s.weight_index(l)] < 0) l = conjugate_label(s, l);
  return r;
}

RationalFunction substitute_signs(const RationalFunction& f, const std::vector<int>& signs) {
  int m = static_cast<int>(signs.size());
  std::vector<RationalFunction> images;
  for (int k = 0; k < m; ++k) images.push_back(RationalFunction::variable(m, k) * Rational(signs[k]));
  return f.compose(images);
}

}  // namespace

TEST_CASE("edge factor examples") {
  CHECK(edge_factor(P3, 1, 2, 1) == rf("-4*x^2*(x^2 - y^2)^2"));
  CHECK(edge_factor(P1, 1, 2, 1) == rf("-4*x1^2", 1));
  for (int d = 1; d <= 3; ++d)
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b)
        if (a != b) CHECK(edge_factor(P3, a, b, d) == edge_factor(P3, b, a, d));
  CHECK_THROWS_AS(edge_factor(P3, 2, 2, 1), std::invalid_argument);
}

TEST_CASE("half-edge factor examples") {
  CHECK(halfedge_factor(P3, 1, 1) == rf("1/(2*x*(y^2 - x^2))"));
  CHECK(halfedge_factor(P1, 1, 1) == rf("1/(2*x1)", 1));
  CHECK(halfedge_factor(P3, 3, 1) == rf("1/(2*y*(x^2 - y^2))"));
}

TEST_CASE("degree-two euler inverses") {
  CHECK(graph_euler_inverse(P3, sep_d2(1)) == rf("1/(8*x^2*(x^2 - y^2))"));
  CHECK(graph_euler_inverse(P3, nonsep_d2(1)) == rf("-1/(8*x^2*(x^2 - y^2))"));
  CHECK(graph_euler_inverse(P3, nonsep_d2(1), 1) == rf("1/(8*x^2*(x^2 - y^2))"));
  CHECK(insertion_factor(P3, sep_d2(1), 3, 2) == rf("x^4"));
  CHECK(insertion_factor(P3, nonsep_d2(1), 3, 2) == rf("x^4"));
}

TEST_CASE("degree-two calibration gives plus and minus a quarter") {
  // Four labelings each; every locus is represented by a half and its
  // conjugate, so 2^ell/(D*Aut*2) = 4/(1*2*2) = 1.
  RationalFunction s(2), n(2);
  for (int i = 1; i <= 4; ++i) {
    s = s + insertion_factor(P3, sep_d2(i), 3, 2) * graph_euler_inverse(P3, sep_d2(i));
    n = n + insertion_factor(P3, nonsep_d2(i), 3, 2) * graph_euler_inverse(P3, nonsep_d2(i));
  }
  CHECK(s == rf("1/4"));
  CHECK(n == rf("-1/4"));
}

TEST_CASE("insertion factor rejects even exponents") {
  CHECK_THROWS_AS(insertion_factor(P3, sep_d2(1), 2, 2), std::invalid_argument);
}

TEST_CASE("euler inverse is homogeneous") {
  for (const auto& g : enumerate_half_graphs(P3, 4, Involution::kTau)) {
    auto f = graph_euler_inverse(P3, g);
    CHECK(homogeneous(f.num()));
    CHECK(homogeneous(f.den()));
  }
}

TEST_CASE("symbolic and numeric assembly agree") {
  std::vector<Rational> pt{Rational(7, 3), Rational(-5)};
  NumericWeights nw{P3, pt};
  for (const auto& g : enumerate_half_graphs(P3, 4, Involution::kEta)) {
    auto sym = graph_euler_inverse(P3, g) * insertion_factor(P3, g, 3, 4);
    auto num = local::graph_euler_inverse(nw, g, -1) * local::insertion_factor(nw, g, 3, 4);
    CHECK(sym.evaluate(pt) == num.v);
  }
}

TEST_CASE("property: conjugation covariance on random halves") {
  std::mt19937 rng(31);
  for (int m : {2, 3}) {
    SpaceSpec s{m};
    auto gs = enumerate_half_graphs(s, m == 2 ? 4 : 2, Involution::kTau);
    std::uniform_int_distribution<std::size_t> pick(0, gs.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int iter = 0; iter < 25; ++iter) {
      const HalfGraph& g = gs[pick(rng)];
      std::vector<int> signs(m);
      for (auto& x : signs) x = coin(rng) ? 1 : -1;
      auto lhs = graph_euler_inverse(s, flip_pairs(s, g, signs));
      auto rhs = substitute_signs(graph_euler_inverse(s, g), signs);
      CHECK(lhs == rhs);
      // Full conjugation is the all-minus substitution.
      std::vector<int> all(m, -1);
      CHECK(graph_euler_inverse(s, conjugate(s, g)) == substitute_signs(graph_euler_inverse(s, g), all));
    }
  }
}

TEST_CASE("property: non-separable half choice does not change the value") {
  for (int m : {2, 3})
    for (int d : {2, 4}) {
      if (m == 3 && d == 4) continue;
      SpaceSpec s{m};
      int ell = 2;
      std::map<std::string, std::vector<RationalFunction>> by_locus;
      for (const auto& g : enumerate_half_graphs(s, d, Involution::kEta)) {
        if (g.kind != GraphKind::kNonSeparable) continue;
        auto v = insertion_factor(s, g, 2 * m - 1, ell) * graph_euler_inverse(s, g) /
                 RationalFunction(s.m, Rational(multiplicity_divisor(g, NodeConvention::kUniform) *
                                                 automorphism_order(s, g)));
        by_locus[locus_key(full_graph(s, g))].push_back(v);
      }
      CHECK_FALSE(by_locus.empty());
      int shared = 0;
      for (const auto& [k, vs] : by_locus) {
        if (vs.size() > 1) ++shared;
        for (const auto& v : vs) CHECK(v == vs.front());
      }
      CHECK(shared > 0);
    }
}

TEST_CASE("conventions") {
  CHECK(nonseparable_sign(NodeConvention::kUniform, 4) == -1);
  CHECK(nonseparable_sign(NodeConvention::kDegreeParity, 2) == -1);
  CHECK(nonseparable_sign(NodeConvention::kDegreeParity, 4) == 1);
  CHECK(parse_convention("uniform") == NodeConvention::kUniform);
  CHECK_THROWS_AS(parse_convention("other"), std::invalid_argument);
  CHECK(multiplicity_divisor(sep_d2(1), NodeConvention::kUniform) == 1);
}
