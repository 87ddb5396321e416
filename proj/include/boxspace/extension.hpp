#pragma once

#include <map>
#include <vector>

#include "boxspace/box.hpp"
#include "boxspace/embedding.hpp"
#include "boxspace/semidirect.hpp"

namespace boxspace {

// The four box spaces of an extension sequence, sharing one gap vector:
// word metrics on the total groups, the subspace metric those induce on
// the kernels, quotient metrics on the cyclic quotients, and the kernel
// metric used for Gaussian maps (wall metrics when the kernels carry
// cover data, otherwise the induced metric itself).
struct ExtensionBoxes {
  std::vector<ExtensionTriple> triples;
  BoxSpace gamma_box;
  BoxSpace h_box;
  BoxSpace g_box;
  BoxSpace psi_kernel_box;
  bool kernel_is_wall = false;

  // h-local index of a gamma vertex, or -1 outside the kernel
  std::vector<std::vector<int>> h_local;  // per component
};

inline constexpr double kDefaultMinGap = 512.0;

// Shared gaps obey every box's diameter constraint and a floor that keeps
// the far-separation condition non-vacuous at desk scale. A positive
// explicit_gap is used verbatim for every gap and validated (GapTooSmall).
ExtensionBoxes assemble_extension_boxes(std::vector<ExtensionTriple> triples,
                                        std::vector<CoverData> covers = {},
                                        double min_gap = kDefaultMinGap,
                                        double explicit_gap = 0.0);

// eta(gamma, g) = sigma(g)^-1 gamma sigma(pi(gamma)^-1 g), tabulated per
// component; every value certified to lie in the kernel.
struct EtaTable {
  int gamma_order = 0;
  int g_order = 0;
  std::vector<int> values;  // gamma * g_order + g -> gamma vertex in H

  int at(int gamma, int g) const {
    return values[static_cast<size_t>(gamma) * g_order + g];
  }
};

EtaTable eta_table(const ExtensionTriple& t);

struct LemmaReport {
  long long triples_checked = 0;
  long long max_violation = 0;  // <= 0 when both inequalities hold
  std::map<long long, long long> slack_histogram;
};

// Both distance inequalities relating d_Gamma, d_G and d_H(eta, eta),
// evaluated exactly over every (gamma1, gamma2, g) triple per component.
LemmaReport lemma_dg_check(const ExtensionBoxes& eb);

// phi(gamma): finitely supported map from box points of the quotient
// chain to unit vectors, stored as sparse atoms (g point, weight, kernel
// point). Cutoff components get the point mass at the first identity.
struct PhiGamma {
  double R = 0.0;
  double eps = 0.0;
  int cutoff_components = 0;  // N_R
  double s_g = 0.0;
  double t = 0.0;
  double kernel_bound = 0.0;  // rho_plus of the kernel metric at 2 S_G + R
  double m_gamma = 0.0;

  struct Atom {
    int g;
    double weight;
    int h;
  };
  std::vector<std::vector<Atom>> vectors;  // per gamma box point, sorted by g
  UnitVectorMap psi;                       // over kernel box points
  PropAMap phi_g;                          // over quotient box points

  double inner(int x, int y) const;
  double norm_error(int x) const;  // | ||phi(x)|| - 1 |
};

PhiGamma build_phi_gamma(const ExtensionBoxes& eb, double R, double eps,
                         double psd_tol = 1e-8, double norm_tol = 1e-9);

struct VerdictReport {
  double R = 0.0, eps = 0.0, delta = 0.0;
  double s_g = 0.0;
  double s_h = 0.0;
  double m_gamma = 0.0;
  int n_r = 0;
  double far_threshold = 0.0;  // S = 3 S_G + 3 S_H + M_Gamma
  double min_margin_1 = 0.0;   // eps - |1 - <phi,phi>| over close pairs
  double min_margin_2 = 0.0;   // delta - |<phi,phi>| over far pairs
  long long close_pairs = 0;
  long long far_pairs = 0;
  std::pair<int, int> witness_1{-1, -1};  // tightest close pair
  std::pair<int, int> witness_2{-1, -1};  // tightest far pair
  double max_norm_error = 0.0;
  bool pass = false;
};

// Exhaustive scan of every pair: close pairs must satisfy the overlap
// condition strictly, far pairs (at or beyond S) the smallness condition.
// Throws ConditionViolated with the witness pair on any failure.
VerdictReport verify_conditions(const ExtensionBoxes& eb, const PhiGamma& phi,
                                double delta);

}  // namespace boxspace
