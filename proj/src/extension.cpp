#include "boxspace/extension.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace boxspace {

namespace {

MetricMatrix restrict_metric(const MetricMatrix& d, const std::vector<int>& points) {
  int n = static_cast<int>(points.size());
  MetricMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m.set(i, j, d.at(points[i], points[j]));
  return m;
}

// quotient metric: d_G(s1, s2) = min d_Gamma over the fibers
MetricMatrix quotient_metric(const MetricMatrix& d_gamma, const std::vector<int>& pi,
                             int g_order) {
  MetricMatrix m(g_order);
  const double inf = 1e18;
  std::vector<double> best(static_cast<size_t>(g_order) * g_order, inf);
  int n = d_gamma.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      size_t k = static_cast<size_t>(pi[x]) * g_order + pi[y];
      best[k] = std::min(best[k], d_gamma.at(x, y));
    }
  for (int s1 = 0; s1 < g_order; ++s1)
    for (int s2 = 0; s2 < g_order; ++s2)
      m.set(s1, s2, best[static_cast<size_t>(s1) * g_order + s2]);
  return m;
}

}  // namespace

ExtensionBoxes assemble_extension_boxes(std::vector<ExtensionTriple> triples,
                                        std::vector<CoverData> covers,
                                        double min_gap, double explicit_gap) {
  if (triples.empty()) fail(ErrorCode::InvalidArgument, "no extension triples");
  if (!covers.empty() && covers.size() != triples.size())
    fail(ErrorCode::MissingWallData, "need one cover per triple when walls are used");

  ExtensionBoxes eb;
  std::vector<BoxComponent> gamma_comps, h_comps, g_comps, kernel_comps;
  for (size_t i = 0; i < triples.size(); ++i) {
    const ExtensionTriple& t = triples[i];
    certify_triple(t);
    MetricMatrix d_gamma = bfs_metric(t.gamma.graph());

    std::vector<int> locals(t.gamma.order(), -1);
    for (size_t p = 0; p < t.h_elements.size(); ++p) locals[t.h_elements[p]] = static_cast<int>(p);
    eb.h_local.push_back(locals);
    int identity_local = locals[t.gamma.identity()];
    if (identity_local < 0)
      fail(ErrorCode::InvalidArgument, "kernel does not contain the identity");

    MetricMatrix d_h = restrict_metric(d_gamma, t.h_elements);
    MetricMatrix d_g = quotient_metric(d_gamma, t.pi, t.g_quotient.order());
    MetricMatrix d_g_graph = bfs_metric(t.g_quotient.graph());
    for (int a = 0; a < d_g.size(); ++a)
      for (int b = 0; b < d_g.size(); ++b)
        if (d_g.at(a, b) != d_g_graph.at(a, b))
          fail(ErrorCode::InvalidArgument,
               "quotient metric disagrees with the quotient's word metric");

    if (!covers.empty()) {
      const CoverData& c = covers[i];
      if (c.cover.vertex_count != static_cast<int>(t.h_elements.size()) ||
          c.walls.empty())
        fail(ErrorCode::MissingWallData, "cover does not match the kernel");
      kernel_comps.push_back(BoxComponent{wall_metric(c), identity_local});
    }

    gamma_comps.push_back(BoxComponent{std::move(d_gamma), t.gamma.identity()});
    h_comps.push_back(BoxComponent{std::move(d_h), identity_local});
    g_comps.push_back(BoxComponent{std::move(d_g), t.g_quotient.identity()});
  }

  std::vector<double> gaps;
  for (size_t k = 0; k + 1 < triples.size(); ++k) {
    double bound = std::max({gamma_comps[k].metric.diameter(),
                             gamma_comps[k + 1].metric.diameter(),
                             h_comps[k].metric.diameter(),
                             h_comps[k + 1].metric.diameter()});
    if (!kernel_comps.empty())
      bound = std::max({bound, kernel_comps[k].metric.diameter(),
                        kernel_comps[k + 1].metric.diameter()});
    gaps.push_back(explicit_gap > 0.0 ? explicit_gap
                                      : std::max(min_gap, bound + 1.0));
    if (!(gaps.back() > bound))
      fail(ErrorCode::GapTooSmall, "gap " + std::to_string(gaps.back()) +
                                       " must exceed " + std::to_string(bound));
  }

  eb.kernel_is_wall = !kernel_comps.empty();
  eb.gamma_box = assemble(std::move(gamma_comps), gaps);
  eb.h_box = assemble(h_comps, gaps);
  eb.g_box = assemble(std::move(g_comps), gaps);
  eb.psi_kernel_box =
      eb.kernel_is_wall ? assemble(std::move(kernel_comps), gaps) : eb.h_box;
  eb.triples = std::move(triples);
  return eb;
}

EtaTable eta_table(const ExtensionTriple& t) {
  const QuotientGroup& gamma = t.gamma;
  const QuotientGroup& g = t.g_quotient;
  std::vector<bool> in_h(gamma.order(), false);
  for (int v : t.h_elements) in_h[v] = true;

  EtaTable table;
  table.gamma_order = gamma.order();
  table.g_order = g.order();
  table.values.resize(static_cast<size_t>(gamma.order()) * g.order());
  for (int x = 0; x < gamma.order(); ++x) {
    for (int s = 0; s < g.order(); ++s) {
      int target = g.multiply(g.inverse(t.pi[x]), s);
      int value = gamma.multiply(gamma.inverse(t.sigma[s]),
                                 gamma.multiply(x, t.sigma[target]));
      if (!in_h[value])
        fail(ErrorCode::EtaEscapesH, "eta(" + std::to_string(x) + "," +
                                         std::to_string(s) + ") = " +
                                         std::to_string(value));
      table.values[static_cast<size_t>(x) * g.order() + s] = value;
    }
  }
  return table;
}

LemmaReport lemma_dg_check(const ExtensionBoxes& eb) {
  LemmaReport report;
  for (size_t c = 0; c < eb.triples.size(); ++c) {
    const ExtensionTriple& t = eb.triples[c];
    EtaTable eta = eta_table(t);
    const MetricMatrix& d_gamma = eb.gamma_box.components[c].metric;
    const MetricMatrix& d_g = eb.g_box.components[c].metric;
    for (int x = 0; x < t.gamma.order(); ++x) {
      for (int y = 0; y < t.gamma.order(); ++y) {
        for (int s = 0; s < t.g_quotient.order(); ++s) {
          long long dg = static_cast<long long>(d_gamma.at(x, y));
          long long reach = static_cast<long long>(d_g.at(s, t.pi[x])) +
                            static_cast<long long>(d_g.at(s, t.pi[y]));
          // d_H is the metric induced by d_Gamma, so eta distances are
          // plain d_Gamma entries
          long long dh = static_cast<long long>(d_gamma.at(eta.at(x, s), eta.at(y, s)));
          for (long long violation : {dg - (reach + dh), dh - (reach + dg)}) {
            report.max_violation = std::max(report.max_violation, violation);
            ++report.slack_histogram[-violation];
            if (violation > 0)
              fail(ErrorCode::InequalityViolated,
                   "component " + std::to_string(c) + " triple (" +
                       std::to_string(x) + "," + std::to_string(y) + "," +
                       std::to_string(s) + ") violates by " +
                       std::to_string(violation));
          }
          ++report.triples_checked;
        }
      }
    }
  }
  return report;
}

double PhiGamma::inner(int x, int y) const {
  const std::vector<Atom>&a = vectors[x], &b = vectors[y];
  double sum = 0.0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].g < b[j].g)
      ++i;
    else if (b[j].g < a[i].g)
      ++j;
    else {
      sum += a[i].weight * b[j].weight * psi.inner(a[i].h, b[j].h);
      ++i;
      ++j;
    }
  }
  return sum;
}

double PhiGamma::norm_error(int x) const {
  double sum = 0.0;
  for (const Atom& a : vectors[x]) sum += a.weight * a.weight;
  return std::fabs(std::sqrt(sum) - 1.0);
}

PhiGamma build_phi_gamma(const ExtensionBoxes& eb, double R, double eps,
                         double psd_tol, double norm_tol) {
  if (R < 0.0) fail(ErrorCode::InvalidArgument, "R must be nonnegative");
  if (eps <= 0.0 || eps >= 2.0) fail(ErrorCode::InvalidArgument, "eps must be in (0,2)");

  PhiGamma phi;
  phi.R = R;
  phi.eps = eps;
  phi.phi_g = propA_ball_map(eb.g_box, R, eps / 2.0);
  phi.s_g = phi.phi_g.s_radius;

  double bound = 2.0 * phi.s_g + R;
  MetricMatrix d_h = global_metric(eb.h_box);
  MetricMatrix d_k = global_metric(eb.psi_kernel_box);

  // widest kernel distance seen inside the bound window; the +1 keeps the
  // resulting overlap condition strict
  double rho_plus = 0.0;
  int n_h = d_h.size();
  for (int x = 0; x < n_h; ++x)
    for (int y = x + 1; y < n_h; ++y)
      if (d_h.at(x, y) <= bound) rho_plus = std::max(rho_plus, d_k.at(x, y));
  phi.kernel_bound = rho_plus;
  phi.t = -std::log(1.0 - eps / 2.0) / (rho_plus + 1.0);
  phi.psi = gaussian_unit_map(d_k, phi.t, psd_tol);

  // overlap condition for the kernel map, in the induced metric
  for (int x = 0; x < n_h; ++x)
    for (int y = 0; y < n_h; ++y)
      if (d_h.at(x, y) <= bound &&
          !(std::fabs(1.0 - phi.psi.inner(x, y)) < eps / 2.0))
        fail(ErrorCode::ConditionViolated,
             "kernel map overlap fails at pair (" + std::to_string(x) + "," +
                 std::to_string(y) + ")");

  // cutoff: the leading components, after which every gap exceeds R
  int cutoff = 0;
  for (size_t k = 0; k < eb.gamma_box.gaps.size(); ++k)
    if (eb.gamma_box.gaps[k] <= R) cutoff = static_cast<int>(k) + 2;
  phi.cutoff_components = cutoff;

  MetricMatrix d_gamma = global_metric(eb.gamma_box);
  phi.m_gamma = 0.0;
  if (cutoff > 0) {
    int cut_end = eb.gamma_box.offset(cutoff - 1) +
                  eb.gamma_box.components[cutoff - 1].metric.size();
    for (int x = 0; x < cut_end; ++x)
      for (int y = x; y < cut_end; ++y)
        phi.m_gamma = std::max(phi.m_gamma, d_gamma.at(x, y));
  }

  // identity atoms of the first component
  const ExtensionTriple& first = eb.triples[0];
  int g_first = eb.g_box.flatten(0, first.g_quotient.identity());
  int h_first = eb.h_box.flatten(0, eb.h_local[0][first.gamma.identity()]);

  std::vector<EtaTable> etas;
  for (const ExtensionTriple& t : eb.triples) etas.push_back(eta_table(t));

  int total = eb.gamma_box.total_points();
  phi.vectors.resize(total);
  for (int flat = 0; flat < total; ++flat) {
    auto [c, local] = eb.gamma_box.locate(flat);
    if (c < cutoff) {
      phi.vectors[flat].push_back(PhiGamma::Atom{g_first, 1.0, h_first});
      continue;
    }
    const ExtensionTriple& t = eb.triples[c];
    int pi_flat = eb.g_box.flatten(c, t.pi[local]);
    int g_offset = eb.g_box.offset(c);
    int g_size = t.g_quotient.order();
    int h_identity = eb.h_box.flatten(c, eb.h_local[c][t.gamma.identity()]);
    const std::vector<double>& weights = phi.phi_g.phi.vectors[pi_flat];
    for (int g = 0; g < static_cast<int>(weights.size()); ++g) {
      if (weights[g] == 0.0) continue;
      int h_point;
      if (g >= g_offset && g < g_offset + g_size) {
        int value = etas[c].at(local, g - g_offset);
        h_point = eb.h_box.flatten(c, eb.h_local[c][value]);
      } else {
        h_point = h_identity;  // the identity of this component's kernel
      }
      phi.vectors[flat].push_back(PhiGamma::Atom{g, weights[g], h_point});
    }
  }

  for (int flat = 0; flat < total; ++flat)
    if (phi.norm_error(flat) > norm_tol)
      fail(ErrorCode::ConditionViolated,
           "phi norm off unit at point " + std::to_string(flat));
  return phi;
}

VerdictReport verify_conditions(const ExtensionBoxes& eb, const PhiGamma& phi,
                                double delta) {
  if (delta <= 0.0 || delta >= 1.0)
    fail(ErrorCode::InvalidArgument, "delta must be in (0,1)");

  VerdictReport report;
  report.R = phi.R;
  report.eps = phi.eps;
  report.delta = delta;
  report.s_g = phi.s_g;
  report.m_gamma = phi.m_gamma;
  report.n_r = phi.cutoff_components;

  // S_H for delta/3: one past the widest kernel-box distance whose pair
  // still overlaps too much. The diagonal always fails, so s_h >= 1.
  MetricMatrix d_h = global_metric(eb.h_box);
  int n_h = d_h.size();
  double s_h = 0.0;
  for (int x = 0; x < n_h; ++x)
    for (int y = x; y < n_h; ++y)
      if (std::fabs(phi.psi.inner(x, y)) >= delta / 3.0)
        s_h = std::max(s_h, d_h.at(x, y));
  s_h += 1.0;
  report.s_h = s_h;
  // far-separation certificate for the kernel map itself
  for (int x = 0; x < n_h; ++x)
    for (int y = 0; y < n_h; ++y)
      if (d_h.at(x, y) >= s_h && !(std::fabs(phi.psi.inner(x, y)) < delta / 3.0))
        fail(ErrorCode::ConditionViolated,
             "kernel map far condition fails at (" + std::to_string(x) + "," +
                 std::to_string(y) + ")");

  report.far_threshold = 3.0 * phi.s_g + 3.0 * s_h + phi.m_gamma;

  MetricMatrix d_gamma = global_metric(eb.gamma_box);
  int n = d_gamma.size();
  report.min_margin_1 = phi.eps;
  report.min_margin_2 = delta;
  std::string witness;
  for (int x = 0; x < n && witness.empty(); ++x) {
    for (int y = x; y < n; ++y) {
      double d = d_gamma.at(x, y);
      bool close = d <= phi.R;
      bool far = d >= report.far_threshold;
      if (!close && !far) continue;
      double inner = phi.inner(x, y);
      if (close) {
        ++report.close_pairs;
        double margin = phi.eps - std::fabs(1.0 - inner);
        if (margin < report.min_margin_1) {
          report.min_margin_1 = margin;
          report.witness_1 = {x, y};
        }
        if (margin <= 0.0) {
          witness = "overlap condition fails at pair (" + std::to_string(x) +
                    "," + std::to_string(y) + "), |1-<phi,phi>| = " +
                    std::to_string(std::fabs(1.0 - inner));
          break;
        }
      }
      if (far) {
        ++report.far_pairs;
        double margin = delta - std::fabs(inner);
        if (margin < report.min_margin_2) {
          report.min_margin_2 = margin;
          report.witness_2 = {x, y};
        }
        if (margin <= 0.0) {
          witness = "far condition fails at pair (" + std::to_string(x) + "," +
                    std::to_string(y) + "), |<phi,phi>| = " + std::to_string(std::fabs(inner));
          break;
        }
      }
    }
  }
  for (int x = 0; x < n; ++x)
    report.max_norm_error = std::max(report.max_norm_error, phi.norm_error(x));
  if (!witness.empty()) fail(ErrorCode::ConditionViolated, witness);
  report.pass = true;
  return report;
}

}  // namespace boxspace
