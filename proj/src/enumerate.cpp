#include <map>
#include <stdexcept>

#include "realgw/graphs.hpp"

namespace realgw {

namespace {

struct Tree {
  std::vector<int> labels;
  std::vector<Edge> edges;
};

// Labeled trees of total edge degree `remaining`, grown by attaching one
// new vertex at a time.  Produces many isomorphic copies; callers dedupe.
void grow(const SpaceSpec& space, Tree& t, int remaining, std::vector<Tree>& out) {
  if (remaining == 0) {
    out.push_back(t);
    return;
  }
  int n = static_cast<int>(t.labels.size());
  for (int p = 0; p < n; ++p)
    for (int d = 1; d <= remaining; ++d)
      for (int l = 1; l <= space.num_labels(); ++l) {
        if (l == t.labels[p]) continue;
        t.labels.push_back(l);
        t.edges.push_back({p, n, d});
        grow(space, t, remaining - d, out);
        t.labels.pop_back();
        t.edges.pop_back();
      }
}

std::vector<Tree> trees(const SpaceSpec& space, int total_degree) {
  std::vector<Tree> out;
  for (int l = 1; l <= space.num_labels(); ++l) {
    Tree t{{l}, {}};
    grow(space, t, total_degree, out);
  }
  // Dedupe plain labeled trees before decorating.
  std::map<std::string, Tree> uniq;
  for (auto& t : out) {
    HalfGraph h;
    h.kind = GraphKind::kSeparable;
    h.labels = t.labels;
    h.edges = t.edges;
    h.half_edges = {HalfEdge{0, 0}, HalfEdge{0, 0}};
    uniq.emplace(canonical_id(h), std::move(t));
  }
  std::vector<Tree> result;
  for (auto& [k, t] : uniq) result.push_back(std::move(t));
  return result;
}

}  // namespace

std::vector<HalfGraph> enumerate_half_graphs(const SpaceSpec& space, int d, Involution phi) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  std::map<std::string, HalfGraph> found;
  auto add = [&](HalfGraph g) { found.emplace(canonical_id(g), std::move(g)); };

  for (int s = 0; 2 * s <= d; ++s) {
    int rest = d - 2 * s;
    for (const Tree& t : trees(space, s)) {
      int n = static_cast<int>(t.labels.size());
      for (int d1 = 1; 2 * d1 <= rest; ++d1) {
        int d2 = rest - d1;
        if (phi == Involution::kEta && (d1 % 2 == 0 || d2 % 2 == 0)) continue;
        for (int a1 = 0; a1 < n; ++a1)
          for (int a2 = 0; a2 < n; ++a2) {
            HalfGraph g;
            g.kind = GraphKind::kSeparable;
            g.labels = t.labels;
            g.edges = t.edges;
            g.half_edges = {HalfEdge{a1, d1}, HalfEdge{a2, d2}};
            add(std::move(g));
          }
      }
      if (rest == 0 && s > 0) {
        HalfGraph base;
        base.kind = GraphKind::kNonSeparable;
        base.labels = t.labels;
        base.edges = t.edges;
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            if (q == p || t.labels[q] != conjugate_label(space, t.labels[p])) continue;
            if (base.incident_edges(q).size() != 1) continue;
            HalfGraph g = base;
            g.p0 = p;
            g.p0_bar = q;
            add(std::move(g));
          }
      }
    }
  }
  std::vector<HalfGraph> out;
  out.reserve(found.size());
  for (auto& [k, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace realgw
