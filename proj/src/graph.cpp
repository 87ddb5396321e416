#include "boxspace/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "boxspace/linalg.hpp"

namespace boxspace {

int LabeledMultigraph::label_arity() const {
  int arity = 0;
  for (const Edge& e : edges) arity = std::max(arity, e.label + 1);
  return arity;
}

void LabeledMultigraph::validate() const {
  if (vertex_count < 0) fail(ErrorCode::InvalidArgument, "negative vertex count");
  if (vertex_count > 0 && (basepoint < 0 || basepoint >= vertex_count))
    fail(ErrorCode::InvalidArgument, "basepoint out of range");
  for (const Edge& e : edges) {
    if (e.src < 0 || e.src >= vertex_count || e.dst < 0 || e.dst >= vertex_count)
      fail(ErrorCode::InvalidArgument, "edge endpoint out of range");
    if (e.label < 0) fail(ErrorCode::InvalidArgument, "negative edge label");
  }
}

double MetricMatrix::diameter() const {
  double m = 0.0;
  for (double v : d_) m = std::max(m, v);
  return m;
}

void MetricMatrix::check_metric_axioms() const {
  for (int i = 0; i < n_; ++i) {
    if (at(i, i) != 0.0)
      fail(ErrorCode::InvalidArgument, "nonzero diagonal at " + std::to_string(i));
    for (int j = 0; j < n_; ++j) {
      if (at(i, j) < 0.0) fail(ErrorCode::InvalidArgument, "negative distance");
      if (at(i, j) != at(j, i)) fail(ErrorCode::InvalidArgument, "asymmetric matrix");
    }
  }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        if (at(i, k) > at(i, j) + at(j, k))
          fail(ErrorCode::InvalidArgument,
               "triangle inequality fails at (" + std::to_string(i) + "," +
                   std::to_string(j) + "," + std::to_string(k) + ")");
}

Incidence::Incidence(const LabeledMultigraph& g) : at(g.vertex_count) {
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    at[g.edges[e].src].emplace_back(e, g.edges[e].dst);
    at[g.edges[e].dst].emplace_back(e, g.edges[e].src);
  }
}

std::vector<int> bfs_distances(const Incidence& inc, int vertex_count, int source) {
  std::vector<int> dist(vertex_count, -1);
  std::queue<int> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (auto [e, w] : inc.at[u]) {
      (void)e;
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

std::vector<int> bfs_distances(const LabeledMultigraph& g, int source) {
  return bfs_distances(Incidence(g), g.vertex_count, source);
}

bool is_connected(const LabeledMultigraph& g) {
  if (g.vertex_count == 0) return true;
  std::vector<int> dist = bfs_distances(g, g.basepoint);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

MetricMatrix bfs_metric(const LabeledMultigraph& g) {
  g.validate();
  Incidence inc(g);
  MetricMatrix m(g.vertex_count);
  for (int s = 0; s < g.vertex_count; ++s) {
    std::vector<int> dist = bfs_distances(inc, g.vertex_count, s);
    for (int v = 0; v < g.vertex_count; ++v) {
      if (dist[v] < 0)
        fail(ErrorCode::DisconnectedGraph,
             "vertex " + std::to_string(v) + " unreachable from " + std::to_string(s));
      m.set(s, v, dist[v]);
    }
  }
  return m;
}

std::optional<int> girth(const LabeledMultigraph& g) {
  g.validate();
  Incidence inc(g);
  int best = -1;
  // BFS from every vertex; a non-tree edge with both endpoints reached
  // closes a walk of length d[src]+d[dst]+1 through the root, and the
  // minimum over roots is the girth. Loops and parallel edges fall out
  // of the same rule (candidates 1 and 2).
  for (int s = 0; s < g.vertex_count; ++s) {
    std::vector<int> dist(g.vertex_count, -1);
    std::vector<int> via_edge(g.vertex_count, -1);
    std::queue<int> queue;
    dist[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (auto [e, w] : inc.at[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          via_edge[w] = e;
          queue.push(w);
        }
      }
    }
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      int u = g.edges[e].src, w = g.edges[e].dst;
      if (dist[u] < 0 || dist[w] < 0) continue;
      if (via_edge[u] == e || via_edge[w] == e) continue;  // tree edge
      int cand = dist[u] + dist[w] + 1;
      if (best < 0 || cand < best) best = cand;
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

namespace {

// Iterative bridge detection via DFS low-points; only the tree edge id is
// excluded when looking back, so a parallel copy counts as a back edge.
bool has_bridge(const LabeledMultigraph& g, const Incidence& inc) {
  int n = g.vertex_count;
  std::vector<int> disc(n, -1), low(n, 0), parent_edge(n, -1);
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<std::pair<int, size_t>> stack;
    disc[root] = low[root] = timer++;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [u, it] = stack.back();
      if (it < inc.at[u].size()) {
        auto [e, w] = inc.at[u][it++];
        if (e == parent_edge[u]) continue;
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          parent_edge[w] = e;
          stack.emplace_back(w, 0);
        } else {
          low[u] = std::min(low[u], disc[w]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().first;
          low[p] = std::min(low[p], low[u]);
          if (low[u] > disc[p]) return true;  // parent_edge[u] is a bridge
        }
      }
    }
  }
  return false;
}

}  // namespace

bool is_two_edge_connected(const LabeledMultigraph& g) {
  g.validate();
  if (!is_connected(g)) return false;
  Incidence inc(g);
  return !has_bridge(g, inc);
}

CycleBasis cycle_basis(const LabeledMultigraph& g) {
  g.validate();
  int n = g.vertex_count;
  int edge_count = static_cast<int>(g.edges.size());
  Incidence inc(g);

  CycleBasis cb;
  cb.parent_edge.assign(n, -1);
  cb.depth.assign(n, 0);
  std::vector<bool> visited(n, false), in_tree(edge_count, false);
  std::queue<int> queue;
  visited[g.basepoint] = true;
  queue.push(g.basepoint);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (auto [e, w] : inc.at[u]) {
      if (!visited[w]) {
        visited[w] = true;
        in_tree[e] = true;
        cb.parent_edge[w] = e;
        cb.depth[w] = cb.depth[u] + 1;
        cb.tree_edges.push_back(e);
        queue.push(w);
      }
    }
  }
  for (bool v : visited)
    if (!v) fail(ErrorCode::DisconnectedGraph, "cycle basis needs a connected graph");

  for (int e = 0; e < edge_count; ++e)
    if (!in_tree[e]) cb.cotree_edges.push_back(e);
  cb.rank = static_cast<int>(cb.cotree_edges.size());

  cb.crossing_vectors.assign(edge_count, BitVec(cb.rank));
  for (int j = 0; j < cb.rank; ++j) {
    int e = cb.cotree_edges[j];
    cb.crossing_vectors[e].set(j, true);
    // flip bit j along the tree path between the endpoints
    int a = g.edges[e].src, b = g.edges[e].dst;
    while (cb.depth[a] > cb.depth[b]) {
      cb.crossing_vectors[cb.parent_edge[a]].flip(j);
      const Edge& pe = g.edges[cb.parent_edge[a]];
      a = (pe.src == a) ? pe.dst : pe.src;
    }
    while (cb.depth[b] > cb.depth[a]) {
      cb.crossing_vectors[cb.parent_edge[b]].flip(j);
      const Edge& pe = g.edges[cb.parent_edge[b]];
      b = (pe.src == b) ? pe.dst : pe.src;
    }
    while (a != b) {
      cb.crossing_vectors[cb.parent_edge[a]].flip(j);
      const Edge& pa = g.edges[cb.parent_edge[a]];
      a = (pa.src == a) ? pa.dst : pa.src;
      cb.crossing_vectors[cb.parent_edge[b]].flip(j);
      const Edge& pb = g.edges[cb.parent_edge[b]];
      b = (pb.src == b) ? pb.dst : pb.src;
    }
  }
  return cb;
}

int vertex_degree(const LabeledMultigraph& g, int v) {
  int deg = 0;
  for (const Edge& e : g.edges) {
    if (e.src == v) ++deg;
    if (e.dst == v) ++deg;
  }
  return deg;
}

namespace {

// out[v*k+l] / in[v*k+l] tables, or empty if the graph is not label-regular
std::pair<std::vector<int>, std::vector<int>> label_tables(const LabeledMultigraph& g) {
  int k = g.label_arity();
  std::vector<int> out(static_cast<size_t>(g.vertex_count) * k, -1);
  std::vector<int> in(static_cast<size_t>(g.vertex_count) * k, -1);
  for (const Edge& e : g.edges) {
    size_t o = static_cast<size_t>(e.src) * k + e.label;
    size_t i = static_cast<size_t>(e.dst) * k + e.label;
    if (out[o] >= 0 || in[i] >= 0) return {};
    out[o] = e.dst;
    in[i] = e.src;
  }
  for (int x : out)
    if (x < 0) return {};
  for (int x : in)
    if (x < 0) return {};
  return {std::move(out), std::move(in)};
}

}  // namespace

bool is_label_regular(const LabeledMultigraph& g) {
  if (static_cast<long long>(g.edges.size()) !=
      static_cast<long long>(g.vertex_count) * g.label_arity())
    return false;
  if (g.label_arity() == 0) return true;
  return !label_tables(g).first.empty();
}

bool cayley_label_isomorphic(const LabeledMultigraph& a, const LabeledMultigraph& b) {
  if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size() ||
      a.label_arity() != b.label_arity())
    return false;
  if (a.vertex_count == 0) return true;
  auto [out_a, in_a] = label_tables(a);
  auto [out_b, in_b] = label_tables(b);
  if (out_a.empty() || out_b.empty())
    fail(ErrorCode::InvalidArgument, "label isomorphism needs label-regular graphs");
  int k = a.label_arity();
  std::vector<int> image(a.vertex_count, -1), hit(b.vertex_count, 0);
  std::queue<int> queue;
  image[a.basepoint] = b.basepoint;
  hit[b.basepoint] = 1;
  queue.push(a.basepoint);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (int l = 0; l < k; ++l) {
      std::pair<int, int> steps[2] = {
          {out_a[static_cast<size_t>(u) * k + l], out_b[static_cast<size_t>(image[u]) * k + l]},
          {in_a[static_cast<size_t>(u) * k + l], in_b[static_cast<size_t>(image[u]) * k + l]}};
      for (auto [va, vb] : steps) {
        if (image[va] < 0) {
          if (hit[vb]) return false;
          image[va] = vb;
          hit[vb] = 1;
          queue.push(va);
        } else if (image[va] != vb) {
          return false;
        }
      }
    }
  }
  for (int v : image)
    if (v < 0) return false;  // a disconnected; cannot certify
  return true;
}

std::vector<double> spectrum(const LabeledMultigraph& g) {
  g.validate();
  if (!is_connected(g)) fail(ErrorCode::DisconnectedGraph, "spectrum needs a connected graph");
  int n = g.vertex_count;
  if (n == 0) return {};
  int degree = vertex_degree(g, 0);
  for (int v = 1; v < n; ++v)
    if (vertex_degree(g, v) != degree)
      fail(ErrorCode::NotRegular, "vertex degrees differ");
  if (degree == 0) fail(ErrorCode::NotRegular, "degree zero");

  std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
  for (const Edge& e : g.edges) {
    a[static_cast<size_t>(e.src) * n + e.dst] += 1.0;
    a[static_cast<size_t>(e.dst) * n + e.src] += 1.0;
  }
  for (double& x : a) x /= degree;
  SymEig eig = eig_sym(a, n);
  return eig.values;
}

}  // namespace boxspace
