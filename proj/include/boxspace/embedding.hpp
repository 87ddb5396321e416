#pragma once

#include <vector>

#include "boxspace/box.hpp"
#include "boxspace/cover.hpp"
#include "boxspace/linalg.hpp"

namespace boxspace {

struct PointCloud {
  int dimension = 0;
  std::vector<std::vector<double>> points;
};

// Unit vectors with a cached Gram matrix; every ||vector|| = 1 up to 1e-9.
struct UnitVectorMap {
  std::vector<std::vector<double>> vectors;
  std::vector<double> gram;

  int size() const { return static_cast<int>(vectors.size()); }
  double inner(int x, int y) const {
    return gram[static_cast<size_t>(x) * size() + y];
  }
};

// A box space whose components are homology covers carrying wall data,
// metrized by the wall metrics.
struct WallBox {
  std::vector<CoverData> covers;
  BoxSpace box;
};

WallBox assemble_wall_box(const TowerReport& tower);
WallBox assemble_wall_box(std::vector<CoverData> covers,
                          std::vector<double> gaps = {});

// Explicit coordinates realizing the global wall metric: per component
// its wall bits (basepoint bits elsewhere, which are all zero) plus the
// basepoint chain position split into unit steps. Squared Euclidean
// distance equals the global wall metric exactly, in integer arithmetic.
// Requires integer gaps.
PointCloud wall_embedding(const WallBox& wb);

// Min eigenvalue of -1/2 J D J; D is of negative type iff this is >= -1e-8.
double negative_type_check(const MetricMatrix& d);

// Unit vectors with <psi(x), psi(y)> = exp(-t d(x,y)), via eigendecomposition
// of the kernel. Eigenvalues in (-psd_tol, 0) are clipped to zero; anything
// more negative is a hard KernelNotPSD error.
UnitVectorMap gaussian_unit_map(const MetricMatrix& d, double t,
                                double psd_tol = 1e-8);

struct PropAMap {
  double s_radius = 0.0;  // S_G: support radius actually used
  UnitVectorMap phi;      // normalized ball indicators over the box points
};

// Smallest S (over observed global distances) such that normalized
// indicators of S-balls satisfy |1 - <phi(x), phi(y)>| < eps strictly for
// every pair at global distance <= R. Support is inside B_S(x) by
// construction. NoValidS reports the worst pair if the cap is reached.
PropAMap propA_ball_map(const BoxSpace& box, double R, double eps);

}  // namespace boxspace
