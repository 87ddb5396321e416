#pragma once

#include <optional>
#include <vector>

#include "boxspace/graph.hpp"

namespace boxspace {

inline constexpr long long kDefaultSizeCap = 1LL << 20;

// A Z/2-homology cover bundled with its projection to the base and the
// wall bit-table h: h(x, e) is the crossing parity of base edge e along
// any path from the cover basepoint to x.
struct CoverData {
  LabeledMultigraph cover;
  LabeledMultigraph base;
  std::vector<int> vertex_projection;  // cover vertex -> base vertex
  std::vector<int> edge_projection;    // cover edge -> base edge
  int deck_rank = 0;
  std::vector<BitVec> walls;  // per cover vertex, one bit per base edge
  bool base_two_edge_connected = true;
};

struct TowerReport {
  std::vector<CoverData> levels;  // levels[i].base is the previous graph in the chain
  std::vector<int> sizes;         // vertex counts, seed first
  std::vector<std::optional<int>> girths;
  std::vector<int> diameters;
  bool truncated = false;
};

// Cover vertices are (base vertex, GF(2) sheet vector); tree edges lift
// horizontally, cotree edge j shifts the sheet by the j-th basis vector.
// Bases with bridges are accepted (base_two_edge_connected records the
// warning); the wall metric may then degenerate.
CoverData homology_cover(const LabeledMultigraph& base,
                         long long size_cap = kDefaultSizeCap);

// d_W(x, y) = number of walls separating x and y = Hamming distance of
// their h-rows.
MetricMatrix wall_metric(const CoverData& c);

// Largest t such that d_W = d_graph for every pair at graph distance < t;
// cover diameter + 1 when they agree everywhere.
int agreement_radius(const CoverData& c);

// Iterate homology covers from the seed until max_levels graphs exist or
// the size cap trips (recorded as truncation, not failure).
TowerReport build_tower(const LabeledMultigraph& seed, int max_levels,
                        long long size_cap = kDefaultSizeCap);

}  // namespace boxspace
