#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

namespace realgw {

// Target P^{2m-1} with fixed points labeled 1..2m; bar swaps 2k-1 and 2k.
struct SpaceSpec {
  int m = 2;

  int num_labels() const { return 2 * m; }
  int dimension() const { return 2 * m - 1; }
  // Index of the independent weight carrying label i, and its sign.
  int weight_index(int label) const { return (label - 1) / 2; }
  int weight_sign(int label) const { return label % 2 ? 1 : -1; }
};

int conjugate_label(const SpaceSpec& space, int label);

enum class Involution { kTau, kEta };
enum class GraphKind { kSeparable, kNonSeparable };
enum class InvolutionKind { kCa, kCm, kCk };

std::string to_string(Involution phi);
std::string to_string(GraphKind kind);
std::string to_string(InvolutionKind kind);
Involution parse_involution(const std::string& s);

struct Edge {
  int u = 0;
  int v = 0;
  int degree = 1;
};

struct HalfEdge {
  int vertex = 0;
  int degree = 1;
};

struct TypeMultiplicity {
  InvolutionKind kind;
  int multiplicity;
  bool operator==(const TypeMultiplicity&) const = default;
};

// One half of a real genus-one fixed locus.  The edges form a tree on the
// labeled vertices.  A separable half carries the two central half-edges;
// a non-separable half carries the node p0 and the leaf p0_bar, which is
// glued to the conjugate copy of p0 when the full graph is rebuilt.
struct HalfGraph {
  GraphKind kind = GraphKind::kSeparable;
  std::vector<int> labels;
  std::vector<Edge> edges;
  std::array<HalfEdge, 2> half_edges{};
  int p0 = -1;
  int p0_bar = -1;

  int num_vertices() const { return static_cast<int>(labels.size()); }
  std::vector<int> incident_edges(int v) const;
  // Edge indices on the tree path from p0 to p0_bar.
  std::vector<int> spine() const;
  // Neighbor of p0_bar and the degree of its unique edge.
  int p0_bar_neighbor() const;
  int p0_bar_degree() const;
};

// Throws std::invalid_argument describing the first violated invariant.
void validate(const SpaceSpec& space, const HalfGraph& g);

int degree_of(const HalfGraph& g);

// Exhaustive list of half-graphs of degree d, one per isomorphism class of
// decorated halves, sorted by canonical id.
std::vector<HalfGraph> enumerate_half_graphs(const SpaceSpec& space, int d, Involution phi);

// Canonical serialization, invariant under vertex renumbering.
std::string canonical_id(const HalfGraph& g);
// Same with labels forgotten: the combinatorial shape.
std::string shape_key(const HalfGraph& g);
int shape_count(std::span<const HalfGraph> graphs, GraphKind kind);
int shape_count(std::span<const HalfGraph> graphs);

// The full graph: half plus conjugate copy with central edges restored
// (separable) or the conjugate nodes glued (non-separable), together with
// the reflection acting on vertices and edges.
struct FullGraph {
  GraphKind kind = GraphKind::kSeparable;
  std::vector<int> labels;
  std::vector<Edge> edges;
  std::vector<int> vertex_sigma;
  std::vector<int> edge_sigma;
};

FullGraph full_graph(const SpaceSpec& space, const HalfGraph& g);
// Number of label and degree preserving automorphisms of the full graph
// commuting with the reflection.
long automorphism_order(const FullGraph& g);
long automorphism_order(const SpaceSpec& space, const HalfGraph& g);
bool isomorphic(const FullGraph& a, const FullGraph& b);
// Canonical serialization of the fixed locus a half represents.
std::string locus_key(const FullGraph& g);

// Half with every label replaced by its conjugate.
HalfGraph conjugate(const SpaceSpec& space, const HalfGraph& g);

std::vector<TypeMultiplicity> classify_types(const HalfGraph& g, Involution phi);

std::string to_dot(const SpaceSpec& space, std::span<const HalfGraph> graphs);

}  // namespace realgw
