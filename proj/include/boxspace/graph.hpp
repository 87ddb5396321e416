#pragma once

#include <optional>
#include <vector>

#include "boxspace/bitvec.hpp"
#include "boxspace/errors.hpp"

namespace boxspace {

// Finite multigraph with generator-labeled, oriented edges. Loops and
// parallel edges are allowed; for metric purposes every edge is an
// undirected unit-length segment.
struct Edge {
  int src;
  int dst;
  int label;

  bool operator==(const Edge&) const = default;
};

struct LabeledMultigraph {
  int vertex_count = 0;
  std::vector<Edge> edges;
  int basepoint = 0;

  int label_arity() const;  // 1 + max label, 0 when edgeless
  void validate() const;    // index-range checks
};

// Dense symmetric nonnegative distance matrix with zero diagonal. Graph
// metrics hold exact small integers; derived metrics hold reals.
class MetricMatrix {
 public:
  MetricMatrix() = default;
  explicit MetricMatrix(int n) : n_(n), d_(static_cast<size_t>(n) * n, 0.0) {}

  int size() const { return n_; }
  double at(int i, int j) const { return d_[static_cast<size_t>(i) * n_ + j]; }

  void set(int i, int j, double v) {
    d_[static_cast<size_t>(i) * n_ + j] = v;
    d_[static_cast<size_t>(j) * n_ + i] = v;
  }

  double diameter() const;

  // Throws InvalidArgument on a symmetry/diagonal/triangle violation.
  void check_metric_axioms() const;

  const std::vector<double>& data() const { return d_; }

 private:
  int n_ = 0;
  std::vector<double> d_;
};

// Spanning-tree decomposition of the GF(2) cycle space. Cotree edge j
// carries the j-th standard basis vector; a tree edge's crossing vector
// records which fundamental cycles contain it.
struct CycleBasis {
  std::vector<int> tree_edges;    // discovery order
  std::vector<int> cotree_edges;  // ascending edge index; position = basis index
  int rank = 0;                   // E - V + 1 for a connected graph
  std::vector<BitVec> crossing_vectors;  // one per edge, length rank
  std::vector<int> parent_edge;   // per vertex: tree edge into it, -1 at root
  std::vector<int> depth;         // BFS depth per vertex
};

// Undirected incidence lists in ascending edge order; the shared BFS
// machinery for metrics, trees and connectivity.
struct Incidence {
  explicit Incidence(const LabeledMultigraph& g);
  // (edge id, other endpoint); a loop appears twice at its vertex
  std::vector<std::vector<std::pair<int, int>>> at;
};

// Single-source BFS distances; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const LabeledMultigraph& g, int source);
std::vector<int> bfs_distances(const Incidence& inc, int vertex_count, int source);

bool is_connected(const LabeledMultigraph& g);

// All-pairs shortest-path distances, every edge undirected unit length.
MetricMatrix bfs_metric(const LabeledMultigraph& g);

// Length of the shortest cycle: a loop counts 1, a parallel pair 2.
// nullopt for forests.
std::optional<int> girth(const LabeledMultigraph& g);

// Connected and bridgeless.
bool is_two_edge_connected(const LabeledMultigraph& g);

// Deterministic BFS spanning tree from the basepoint (ascending vertex,
// then edge index), plus GF(2) crossing vectors for every edge.
CycleBasis cycle_basis(const LabeledMultigraph& g);

// Eigenvalues of the degree-normalized adjacency matrix, descending.
// A loop adds 2 to its vertex's degree and diagonal entry.
std::vector<double> spectrum(const LabeledMultigraph& g);

int vertex_degree(const LabeledMultigraph& g, int v);

// Each label has exactly one outgoing and one incoming edge per vertex
// (the Cayley-graph shape for quotients of a free group).
bool is_label_regular(const LabeledMultigraph& g);

// Basepoint-preserving, label-preserving isomorphism test for connected
// label-regular graphs, by walking labels in lockstep from the basepoints.
bool cayley_label_isomorphic(const LabeledMultigraph& a, const LabeledMultigraph& b);

}  // namespace boxspace
