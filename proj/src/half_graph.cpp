#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "realgw/graphs.hpp"
#include "canonical.hpp"

namespace realgw {

std::vector<int> HalfGraph::incident_edges(int v) const {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(edges.size()); ++k)
    if (edges[k].u == v || edges[k].v == v) out.push_back(k);
  return out;
}

std::vector<int> HalfGraph::spine() const {
  if (kind != GraphKind::kNonSeparable) return {};
  int n = num_vertices();
  std::vector<int> via(n, -1), prev(n, -1);
  std::vector<bool> seen(n, false);
  std::vector<int> stack{p0};
  seen[p0] = true;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int k : incident_edges(a)) {
      int b = edges[k].u == a ? edges[k].v : edges[k].u;
      if (seen[b]) continue;
      seen[b] = true;
      prev[b] = a;
      via[b] = k;
      stack.push_back(b);
    }
  }
  std::vector<int> path;
  for (int c = p0_bar; c != p0 && c >= 0; c = prev[c]) path.push_back(via[c]);
  std::reverse(path.begin(), path.end());
  return path;
}

int HalfGraph::p0_bar_neighbor() const {
  const Edge& e = edges[incident_edges(p0_bar).at(0)];
  return e.u == p0_bar ? e.v : e.u;
}

int HalfGraph::p0_bar_degree() const { return edges[incident_edges(p0_bar).at(0)].degree; }

void validate(const SpaceSpec& space, const HalfGraph& g) {
  int n = g.num_vertices();
  auto fail = [](const std::string& s) { throw std::invalid_argument("malformed graph: " + s); };
  if (n == 0) fail("no vertices");
  for (int l : g.labels)
    if (l < 1 || l > space.num_labels()) fail("label out of range");
  if (static_cast<int>(g.edges.size()) != n - 1) fail("edge count is not that of a tree");
  std::vector<int> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int a) { return comp[a] == a ? a : comp[a] = find(comp[a]); };
  for (const auto& e : g.edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.u == e.v) fail("bad edge endpoints");
    if (e.degree < 1) fail("edge degree below one");
    if (g.labels[e.u] == g.labels[e.v]) fail("adjacent vertices share a label");
    int a = find(e.u), b = find(e.v);
    if (a == b) fail("edges contain a cycle");
    comp[a] = b;
  }
  if (g.kind == GraphKind::kSeparable) {
    for (const auto& h : g.half_edges)
      if (h.vertex < 0 || h.vertex >= n || h.degree < 1) fail("bad central half-edge");
  } else {
    if (g.p0 < 0 || g.p0 >= n || g.p0_bar < 0 || g.p0_bar >= n || g.p0 == g.p0_bar)
      fail("bad conjugate node pair");
    if (g.labels[g.p0_bar] != conjugate_label(space, g.labels[g.p0]))
      fail("conjugate nodes carry non-conjugate labels");
    if (g.incident_edges(g.p0_bar).size() != 1) fail("p0_bar is not a leaf");
  }
}

int degree_of(const HalfGraph& g) {
  int s = 0;
  for (const auto& e : g.edges) s += e.degree;
  if (g.kind == GraphKind::kSeparable)
    return g.half_edges[0].degree + g.half_edges[1].degree + 2 * s;
  return 2 * s;
}

namespace {

std::string serialize_half(const HalfGraph& g, const std::vector<int>& pos, bool with_labels) {
  int n = g.num_vertices();
  std::ostringstream os;
  os << (g.kind == GraphKind::kSeparable ? "S" : "N") << "|";
  if (with_labels) {
    std::vector<int> lab(n);
    for (int v = 0; v < n; ++v) lab[pos[v]] = g.labels[v];
    for (int v = 0; v < n; ++v) os << (v ? "," : "") << lab[v];
  } else {
    os << n;
  }
  std::vector<std::array<int, 3>> es;
  for (const auto& e : g.edges) {
    int a = pos[e.u], b = pos[e.v];
    es.push_back({std::min(a, b), std::max(a, b), e.degree});
  }
  std::sort(es.begin(), es.end());
  os << "|";
  for (std::size_t k = 0; k < es.size(); ++k)
    os << (k ? "," : "") << es[k][0] << "-" << es[k][1] << ":" << es[k][2];
  os << "|";
  if (g.kind == GraphKind::kSeparable) {
    std::array<std::pair<int, int>, 2> hs{{{g.half_edges[0].degree, pos[g.half_edges[0].vertex]},
                                           {g.half_edges[1].degree, pos[g.half_edges[1].vertex]}}};
    std::sort(hs.begin(), hs.end());
    os << "h=" << hs[0].second << ":" << hs[0].first << "," << hs[1].second << ":" << hs[1].first;
  } else {
    os << "p=" << pos[g.p0] << "," << pos[g.p0_bar];
  }
  return os.str();
}

}  // namespace

std::string canonical_id(const HalfGraph& g) {
  return detail::min_over_class_permutations(
      g.labels, [&](const std::vector<int>& pos) { return serialize_half(g, pos, true); });
}

std::string shape_key(const HalfGraph& g) {
  std::vector<int> colors(g.num_vertices(), 0);
  return detail::min_over_class_permutations(
      colors, [&](const std::vector<int>& pos) { return serialize_half(g, pos, false); });
}

int shape_count(std::span<const HalfGraph> graphs, GraphKind kind) {
  std::set<std::string> keys;
  for (const auto& g : graphs)
    if (g.kind == kind) keys.insert(shape_key(g));
  return static_cast<int>(keys.size());
}

int shape_count(std::span<const HalfGraph> graphs) {
  return shape_count(graphs, GraphKind::kSeparable) + shape_count(graphs, GraphKind::kNonSeparable);
}

HalfGraph conjugate(const SpaceSpec& space, const HalfGraph& g) {
  HalfGraph c = g;
  for (auto& l : c.labels) l = conjugate_label(space, l);
  return c;
}

std::vector<TypeMultiplicity> classify_types(const HalfGraph& g, Involution phi) {
  using K = InvolutionKind;
  if (phi == Involution::kEta || g.kind == GraphKind::kNonSeparable) return {{K::kCk, 1}};
  bool odd1 = g.half_edges[0].degree % 2, odd2 = g.half_edges[1].degree % 2;
  if (odd1 && odd2) return {{K::kCa, 1}};
  if (!odd1 && !odd2) return {{K::kCa, 1}, {K::kCm, -2}, {K::kCk, 1}};
  return {{K::kCa, 1}, {K::kCm, -1}};
}

std::string to_dot(const SpaceSpec& space, std::span<const HalfGraph> graphs) {
  std::ostringstream os;
  os << "graph fixed_loci {\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const HalfGraph& g = graphs[i];
    std::string p = "g" + std::to_string(i) + "_";
    os << "  subgraph cluster_" << i << " {\n    label=\"" << canonical_id(g) << " (P^"
       << space.dimension() << ")\";\n";
    for (int v = 0; v < g.num_vertices(); ++v) {
      os << "    " << p << v << " [label=\"" << g.labels[v] << "\"";
      if (g.kind == GraphKind::kNonSeparable && v == g.p0) os << ", shape=doublecircle";
      if (g.kind == GraphKind::kNonSeparable && v == g.p0_bar) os << ", shape=box";
      os << "];\n";
    }
    for (const auto& e : g.edges)
      os << "    " << p << e.u << " -- " << p << e.v << " [label=\"" << e.degree << "\"];\n";
    if (g.kind == GraphKind::kSeparable) {
      for (int k = 0; k < 2; ++k) {
        os << "    " << p << "h" << k << " [shape=point];\n";
        os << "    " << p << g.half_edges[k].vertex << " -- " << p << "h" << k
           << " [style=dashed, label=\"" << g.half_edges[k].degree << "\"];\n";
      }
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace realgw
