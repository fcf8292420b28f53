#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "canonical.hpp"
#include "realgw/graphs.hpp"

namespace realgw {

FullGraph full_graph(const SpaceSpec& space, const HalfGraph& g) {
  validate(space, g);
  FullGraph f;
  f.kind = g.kind;
  int ne = static_cast<int>(g.edges.size());
  if (g.kind == GraphKind::kSeparable) {
    int n = g.num_vertices();
    f.labels = g.labels;
    for (int v = 0; v < n; ++v) f.labels.push_back(conjugate_label(space, g.labels[v]));
    for (const auto& e : g.edges) f.edges.push_back(e);
    for (const auto& e : g.edges) f.edges.push_back({e.u + n, e.v + n, e.degree});
    for (const auto& h : g.half_edges) f.edges.push_back({h.vertex, h.vertex + n, h.degree});
    for (int v = 0; v < 2 * n; ++v) f.vertex_sigma.push_back((v + n) % (2 * n));
    for (int k = 0; k < ne; ++k) f.edge_sigma.push_back(k + ne);
    for (int k = 0; k < ne; ++k) f.edge_sigma.push_back(k);
    f.edge_sigma.push_back(2 * ne);
    f.edge_sigma.push_back(2 * ne + 1);
    return f;
  }
  // p0_bar on either copy is the conjugate copy of p0.
  std::vector<int> keep, index(g.num_vertices(), -1);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (v != g.p0_bar) {
      index[v] = static_cast<int>(keep.size());
      keep.push_back(v);
    }
  int n = static_cast<int>(keep.size());
  auto map = [&](int v, int copy) {
    if (v == g.p0_bar) return index[g.p0] + (1 - copy) * n;
    return index[v] + copy * n;
  };
  for (int v : keep) f.labels.push_back(g.labels[v]);
  for (int v : keep) f.labels.push_back(conjugate_label(space, g.labels[v]));
  for (int c = 0; c < 2; ++c)
    for (const auto& e : g.edges) f.edges.push_back({map(e.u, c), map(e.v, c), e.degree});
  for (int v = 0; v < 2 * n; ++v) f.vertex_sigma.push_back((v + n) % (2 * n));
  for (int k = 0; k < ne; ++k) f.edge_sigma.push_back(k + ne);
  for (int k = 0; k < ne; ++k) f.edge_sigma.push_back(k);
  return f;
}

namespace {

// Counts (or detects) edge bijections over a fixed vertex map pi from a
// to b that preserve degrees and commute with the reflections.
long count_edge_maps(const FullGraph& a, const FullGraph& b, const std::vector<int>& pi, bool stop_at_one) {
  int ne = static_cast<int>(a.edges.size());
  std::vector<std::vector<int>> options(ne);
  for (int k = 0; k < ne; ++k) {
    const Edge& e = a.edges[k];
    int x = pi[e.u], y = pi[e.v];
    for (int j = 0; j < ne; ++j) {
      const Edge& f = b.edges[j];
      if (f.degree == e.degree && ((f.u == x && f.v == y) || (f.u == y && f.v == x)))
        options[k].push_back(j);
    }
    if (options[k].empty()) return 0;
  }
  std::vector<int> eps(ne, -1);
  std::vector<bool> used(ne, false);
  long count = 0;
  auto rec = [&](auto&& self, int k) -> bool {
    if (k == ne) {
      for (int i = 0; i < ne; ++i)
        if (eps[a.edge_sigma[i]] != b.edge_sigma[eps[i]]) return false;
      ++count;
      return stop_at_one;
    }
    for (int j : options[k]) {
      if (used[j]) continue;
      used[j] = true;
      eps[k] = j;
      bool done = self(self, k + 1);
      used[j] = false;
      if (done) return true;
    }
    return false;
  };
  rec(rec, 0);
  return count;
}

long count_isomorphisms(const FullGraph& a, const FullGraph& b, bool stop_at_one) {
  int n = static_cast<int>(a.labels.size());
  if (a.kind != b.kind || n != static_cast<int>(b.labels.size()) || a.edges.size() != b.edges.size())
    return 0;
  {
    auto la = a.labels, lb = b.labels;
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    if (la != lb) return 0;
  }
  std::vector<int> pi(n, -1);
  std::vector<bool> used(n, false);
  long total = 0;
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) {
      total += count_edge_maps(a, b, pi, stop_at_one);
      return stop_at_one && total > 0;
    }
    if (pi[v] >= 0) return self(self, v + 1);
    for (int w = 0; w < n; ++w) {
      if (used[w] || b.labels[w] != a.labels[v]) continue;
      int sv = a.vertex_sigma[v], sw = b.vertex_sigma[w];
      if (sv != v && (pi[sv] >= 0 || used[sw])) continue;
      pi[v] = w;
      used[w] = true;
      if (sv != v) {
        pi[sv] = sw;
        used[sw] = true;
      }
      bool done = self(self, v + 1);
      if (sv != v) {
        pi[sv] = -1;
        used[sw] = false;
      }
      pi[v] = -1;
      used[w] = false;
      if (done) return true;
    }
    return false;
  };
  rec(rec, 0);
  return total;
}

}  // namespace

long automorphism_order(const FullGraph& g) { return count_isomorphisms(g, g, false); }

long automorphism_order(const SpaceSpec& space, const HalfGraph& g) {
  return automorphism_order(full_graph(space, g));
}

bool isomorphic(const FullGraph& a, const FullGraph& b) { return count_isomorphisms(a, b, true) > 0; }

std::string locus_key(const FullGraph& g) {
  int ne = static_cast<int>(g.edges.size());
  return detail::min_over_class_permutations(g.labels, [&](const std::vector<int>& pos) {
    int n = static_cast<int>(pos.size());
    std::ostringstream os;
    os << (g.kind == GraphKind::kSeparable ? "S" : "N") << "|";
    std::vector<int> lab(n), sig(n);
    for (int v = 0; v < n; ++v) {
      lab[pos[v]] = g.labels[v];
      sig[pos[v]] = pos[g.vertex_sigma[v]];
    }
    for (int v = 0; v < n; ++v) os << (v ? "," : "") << lab[v];
    os << "|";
    for (int v = 0; v < n; ++v) os << (v ? "," : "") << sig[v];
    std::vector<std::array<int, 4>> es;
    for (int k = 0; k < ne; ++k) {
      int a = pos[g.edges[k].u], b = pos[g.edges[k].v];
      es.push_back({std::min(a, b), std::max(a, b), g.edges[k].degree, g.edge_sigma[k] == k});
    }
    std::sort(es.begin(), es.end());
    os << "|";
    for (const auto& e : es) os << e[0] << "-" << e[1] << ":" << e[2] << (e[3] ? "f" : "") << ";";
    return os.str();
  });
}

}  // namespace realgw
