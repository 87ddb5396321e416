#include "boxspace/cover.hpp"

#include <queue>
#include <string>

namespace boxspace {

CoverData homology_cover(const LabeledMultigraph& base, long long size_cap) {
  base.validate();
  CycleBasis cb = cycle_basis(base);  // throws DisconnectedGraph
  int r = cb.rank;
  if (r >= 62 || base.vertex_count > (size_cap >> r))
    fail(ErrorCode::SizeCapExceeded,
         "cover would have " + std::to_string(base.vertex_count) + " * 2^" +
             std::to_string(r) + " vertices (cap " + std::to_string(size_cap) + ")");

  long long sheets = 1LL << r;
  CoverData cd;
  cd.base = base;
  cd.deck_rank = r;
  cd.base_two_edge_connected = is_two_edge_connected(base);

  // cover vertex (v, x) gets index v * 2^r + x
  cd.cover.vertex_count = static_cast<int>(base.vertex_count * sheets);
  cd.cover.basepoint = static_cast<int>(base.basepoint * sheets);
  cd.vertex_projection.resize(cd.cover.vertex_count);
  for (int v = 0; v < base.vertex_count; ++v)
    for (long long x = 0; x < sheets; ++x)
      cd.vertex_projection[v * sheets + x] = v;

  // cotree edge j shifts the sheet by bit j; tree edges keep it
  std::vector<long long> shift(base.edges.size(), 0);
  for (int j = 0; j < r; ++j) shift[cb.cotree_edges[j]] = 1LL << j;

  cd.cover.edges.reserve(base.edges.size() * sheets);
  cd.edge_projection.reserve(base.edges.size() * sheets);
  for (int e = 0; e < static_cast<int>(base.edges.size()); ++e) {
    const Edge& be = base.edges[e];
    for (long long x = 0; x < sheets; ++x) {
      cd.cover.edges.push_back(Edge{static_cast<int>(be.src * sheets + x),
                                    static_cast<int>(be.dst * sheets + (x ^ shift[e])),
                                    be.label});
      cd.edge_projection.push_back(e);
    }
  }

  // Wall table by BFS from the cover basepoint: crossing a lift of base
  // edge e flips bit e. Consistency on non-tree edges certifies that
  // every cover loop crosses each base edge evenly.
  int base_edge_count = static_cast<int>(base.edges.size());
  cd.walls.assign(cd.cover.vertex_count, BitVec(base_edge_count));
  std::vector<bool> visited(cd.cover.vertex_count, false);
  Incidence inc(cd.cover);
  std::queue<int> queue;
  visited[cd.cover.basepoint] = true;
  queue.push(cd.cover.basepoint);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (auto [e, w] : inc.at[u]) {
      BitVec row = cd.walls[u];
      row.flip(cd.edge_projection[e]);
      if (!visited[w]) {
        visited[w] = true;
        cd.walls[w] = row;
        queue.push(w);
      } else if (!(cd.walls[w] == row)) {
        fail(ErrorCode::InvalidArgument, "wall parity inconsistency; not a homology cover");
      }
    }
  }
  for (bool v : visited)
    if (!v) fail(ErrorCode::InvalidArgument, "homology cover came out disconnected");
  return cd;
}

MetricMatrix wall_metric(const CoverData& c) {
  int n = c.cover.vertex_count;
  MetricMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      m.set(i, j, c.walls[i].hamming(c.walls[j]));
  return m;
}

int agreement_radius(const CoverData& c) {
  MetricMatrix graph_d = bfs_metric(c.cover);
  MetricMatrix wall_d = wall_metric(c);
  int n = c.cover.vertex_count;
  int min_disagreement = -1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (wall_d.at(i, j) != graph_d.at(i, j)) {
        int d = static_cast<int>(graph_d.at(i, j));
        if (min_disagreement < 0 || d < min_disagreement) min_disagreement = d;
      }
  if (min_disagreement < 0) return static_cast<int>(graph_d.diameter()) + 1;
  return min_disagreement;
}

TowerReport build_tower(const LabeledMultigraph& seed, int max_levels,
                        long long size_cap) {
  seed.validate();
  TowerReport report;
  LabeledMultigraph current = seed;

  auto record = [&report](const LabeledMultigraph& g) {
    report.sizes.push_back(g.vertex_count);
    report.girths.push_back(girth(g));
    report.diameters.push_back(static_cast<int>(bfs_metric(g).diameter()));
  };
  record(current);

  while (static_cast<int>(report.sizes.size()) < max_levels) {
    CoverData next;
    try {
      next = homology_cover(current, size_cap);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SizeCapExceeded) {
        report.truncated = true;
        break;
      }
      throw;
    }
    if (next.deck_rank == 0) break;  // cover equals base; tower is stationary
    current = next.cover;
    record(current);
    report.levels.push_back(std::move(next));
  }
  return report;
}

}  // namespace boxspace
