#pragma once

#include <utility>
#include <vector>

#include "boxspace/graph.hpp"

namespace boxspace {

struct BoxComponent {
  MetricMatrix metric;
  int basepoint = 0;
};

// Ordered metric components strung onto a line through their basepoints.
// gaps[k] separates the basepoints of components k and k+1 and must
// exceed both diameters; cross-component distances always route through
// the basepoint chain.
struct BoxSpace {
  std::vector<BoxComponent> components;
  std::vector<double> gaps;

  int total_points() const;
  int offset(int comp) const;                // flat index of the component start
  int flatten(int comp, int local) const { return offset(comp) + local; }
  std::pair<int, int> locate(int flat) const;  // (component, local index)
  double chain_position(int comp) const;       // gap sum before the component

  // Global metric between flat point indices.
  double distance(int x, int y) const;
};

std::vector<double> default_gaps(const std::vector<BoxComponent>& components);

// Default rule: gaps[k] = max(diam_k, diam_{k+1}) + 1. Custom gaps are
// validated against the strict diameter constraint (GapTooSmall).
BoxSpace assemble(std::vector<BoxComponent> components);
BoxSpace assemble(std::vector<BoxComponent> components, std::vector<double> gaps);

MetricMatrix global_metric(const BoxSpace& b);

// Empirical distortion envelopes of d2 against d1 over a shared point
// set: rho_plus(t) = max{d2 : d1 <= t}, rho_minus(t) = min{d2 : d1 >= t},
// tabulated at the observed d1 values. Both are non-decreasing by
// construction; `positive` records whether rho_minus(t) > 0 at every
// observed t > 0.
struct EnvelopePair {
  std::vector<double> t;
  std::vector<double> rho_minus;
  std::vector<double> rho_plus;
  bool monotone = true;
  bool positive = true;
};

EnvelopePair distortion_envelope(const MetricMatrix& d1, const MetricMatrix& d2);

}  // namespace boxspace
