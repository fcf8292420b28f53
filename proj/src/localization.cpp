#include "realgw/localization.hpp"

namespace realgw {

std::string to_string(NodeConvention c) {
  return c == NodeConvention::kDegreeParity ? "parity" : "uniform";
}

NodeConvention parse_convention(const std::string& s) {
  if (s == "parity") return NodeConvention::kDegreeParity;
  if (s == "uniform") return NodeConvention::kUniform;
  throw std::invalid_argument("unknown convention '" + s + "' (expected parity or uniform)");
}

int nonseparable_sign(NodeConvention c, int degree) {
  if (c == NodeConvention::kUniform) return -1;
  return (degree / 2) % 2 ? -1 : 1;
}

Integer multiplicity_divisor(const HalfGraph& g, NodeConvention c) {
  Integer d = 1;
  for (const auto& e : g.edges) d *= e.degree;
  if (g.kind == GraphKind::kSeparable) {
    d *= g.half_edges[0].degree;
    d *= g.half_edges[1].degree;
  } else if (c == NodeConvention::kDegreeParity) {
    for (int k : g.spine()) d *= g.edges[k].degree;
  }
  return d;
}

RationalFunction edge_factor(const SpaceSpec& space, int j1, int j2, int d) {
  return local::edge_factor(SymbolicWeights{space}, j1, j2, d);
}

RationalFunction halfedge_factor(const SpaceSpec& space, int i, int d0) {
  return local::halfedge_factor(SymbolicWeights{space}, i, d0);
}

RationalFunction graph_euler_inverse(const SpaceSpec& space, const HalfGraph& g, int nonsep_sign) {
  return local::graph_euler_inverse(SymbolicWeights{space}, g, nonsep_sign);
}

RationalFunction insertion_factor(const SpaceSpec& space, const HalfGraph& g, int t, int ell) {
  return local::insertion_factor(SymbolicWeights{space}, g, t, ell);
}

}  // namespace realgw
