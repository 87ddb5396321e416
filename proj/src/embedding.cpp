#include "boxspace/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "boxspace/bitvec.hpp"

namespace boxspace {

WallBox assemble_wall_box(const TowerReport& tower) {
  return assemble_wall_box(tower.levels);
}

WallBox assemble_wall_box(std::vector<CoverData> covers, std::vector<double> gaps) {
  if (covers.empty()) fail(ErrorCode::MissingWallData, "no covers supplied");
  std::vector<BoxComponent> components;
  for (const CoverData& c : covers) {
    if (c.walls.empty() ||
        static_cast<int>(c.walls.size()) != c.cover.vertex_count)
      fail(ErrorCode::MissingWallData, "cover lacks a wall table");
    components.push_back(BoxComponent{wall_metric(c), c.cover.basepoint});
  }
  BoxSpace box = gaps.empty() ? assemble(std::move(components))
                              : assemble(std::move(components), std::move(gaps));
  return WallBox{std::move(covers), std::move(box)};
}

PointCloud wall_embedding(const WallBox& wb) {
  if (wb.covers.size() != wb.box.components.size())
    fail(ErrorCode::MissingWallData, "wall box is inconsistent");
  long long line_units = 0;
  for (double g : wb.box.gaps) {
    if (g <= 0.0 || g != std::floor(g))
      fail(ErrorCode::InvalidArgument,
           "wall embedding needs positive integer gaps, got " + std::to_string(g));
    line_units += static_cast<long long>(g);
  }
  std::vector<int> block_offset;  // wall-bit block starts
  int dim = 0;
  for (const CoverData& c : wb.covers) {
    block_offset.push_back(dim);
    dim += static_cast<int>(c.base.edges.size());
  }
  int line_offset = dim;
  dim += static_cast<int>(line_units);

  PointCloud cloud;
  cloud.dimension = dim;
  for (size_t comp = 0; comp < wb.covers.size(); ++comp) {
    const CoverData& c = wb.covers[comp];
    long long position = static_cast<long long>(wb.box.chain_position(comp));
    for (int v = 0; v < c.cover.vertex_count; ++v) {
      std::vector<double> x(dim, 0.0);
      // own wall bits; every other block keeps that component's basepoint
      // bits, which vanish by the h(basepoint, e) = 0 invariant
      for (int e = 0; e < static_cast<int>(c.base.edges.size()); ++e)
        if (c.walls[v].get(e)) x[block_offset[comp] + e] = 1.0;
      for (long long u = 0; u < position; ++u) x[line_offset + u] = 1.0;
      cloud.points.push_back(std::move(x));
    }
  }
  return cloud;
}

double negative_type_check(const MetricMatrix& d) {
  SymEig eig = eig_sym(centered_gram(d.data(), d.size()), d.size());
  return eig.values.back();
}

UnitVectorMap gaussian_unit_map(const MetricMatrix& d, double t, double psd_tol) {
  if (t <= 0.0) fail(ErrorCode::InvalidArgument, "gaussian parameter t must be positive");
  int n = d.size();
  std::vector<double> kernel(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      kernel[static_cast<size_t>(i) * n + j] = std::exp(-t * d.at(i, j));

  SymEig eig = eig_sym(kernel, n);
  if (eig.values.back() < -psd_tol)
    fail(ErrorCode::KernelNotPSD,
         "min eigenvalue " + std::to_string(eig.values.back()) + " below -" +
             std::to_string(psd_tol));

  int positive = 0;
  while (positive < n && eig.values[positive] > 0.0) ++positive;

  UnitVectorMap map;
  map.vectors.assign(n, std::vector<double>(positive, 0.0));
  for (int k = 0; k < positive; ++k) {
    double root = std::sqrt(eig.values[k]);
    for (int x = 0; x < n; ++x) map.vectors[x][k] = root * eig.vectors[k][x];
  }
  for (std::vector<double>& v : map.vectors) {
    double norm = 0.0;
    for (double c : v) norm += c * c;
    norm = std::sqrt(norm);
    if (norm <= 0.0) fail(ErrorCode::KernelNotPSD, "kernel row collapsed to zero");
    for (double& c : v) c /= norm;
  }
  map.gram.assign(static_cast<size_t>(n) * n, 0.0);
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      double dot = 0.0;
      for (int k = 0; k < positive; ++k) dot += map.vectors[x][k] * map.vectors[y][k];
      map.gram[static_cast<size_t>(x) * n + y] = dot;
      map.gram[static_cast<size_t>(y) * n + x] = dot;
    }
  return map;
}

PropAMap propA_ball_map(const BoxSpace& box, double R, double eps) {
  if (eps <= 0.0) fail(ErrorCode::InvalidArgument, "eps must be positive");
  MetricMatrix d = global_metric(box);
  int n = d.size();

  std::set<double> candidates;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) candidates.insert(d.at(i, j));

  std::vector<std::pair<int, int>> close_pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (d.at(i, j) <= R) close_pairs.emplace_back(i, j);

  std::pair<int, int> worst{-1, -1};
  double worst_value = 0.0;
  for (double s : candidates) {
    std::vector<BitVec> balls(n, BitVec(n));
    std::vector<int> sizes(n, 0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (d.at(x, y) <= s) {
          balls[x].set(y, true);
          ++sizes[x];
        }
    bool ok = true;
    for (auto [x, y] : close_pairs) {
      BitVec meet = balls[x];
      int overlap = (sizes[x] + sizes[y] - meet.hamming(balls[y])) / 2;
      double inner = overlap / std::sqrt(static_cast<double>(sizes[x]) * sizes[y]);
      if (!(std::fabs(1.0 - inner) < eps)) {
        ok = false;
        worst = {x, y};
        worst_value = inner;
        break;
      }
    }
    if (ok) {
      PropAMap result;
      result.s_radius = s;
      result.phi.vectors.assign(n, std::vector<double>(n, 0.0));
      for (int x = 0; x < n; ++x) {
        double w = 1.0 / std::sqrt(static_cast<double>(sizes[x]));
        for (int y = 0; y < n; ++y)
          if (balls[x].get(y)) result.phi.vectors[x][y] = w;
      }
      result.phi.gram.assign(static_cast<size_t>(n) * n, 0.0);
      for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
          BitVec meet = balls[x];
          int overlap = (sizes[x] + sizes[y] - meet.hamming(balls[y])) / 2;
          double inner = overlap / std::sqrt(static_cast<double>(sizes[x]) * sizes[y]);
          result.phi.gram[static_cast<size_t>(x) * n + y] = inner;
          result.phi.gram[static_cast<size_t>(y) * n + x] = inner;
        }
      return result;
    }
  }
  fail(ErrorCode::NoValidS,
       "no support radius satisfies the overlap condition; worst pair (" +
           std::to_string(worst.first) + "," + std::to_string(worst.second) +
           ") inner product " + std::to_string(worst_value));
}

}  // namespace boxspace
