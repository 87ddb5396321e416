#include "boxspace/semidirect.hpp"

#include <string>

#include "boxspace/builtins.hpp"

namespace boxspace {

namespace {

void certify_action(const ActionSpec& spec) {
  const QuotientGroup& h = spec.h_quotient;
  const std::vector<int>& a = spec.generator_action;
  if (static_cast<int>(a.size()) != h.order())
    fail(ErrorCode::InvalidArgument, "action permutation size mismatch");
  std::vector<bool> hit(h.order(), false);
  for (int v : a) {
    if (v < 0 || v >= h.order() || hit[v])
      fail(ErrorCode::NotBijective, "action is not a permutation");
    hit[v] = true;
  }
  for (int u = 0; u < h.order(); ++u)
    for (int v = 0; v < h.order(); ++v)
      if (a[h.multiply(u, v)] != h.multiply(a[u], a[v]))
        fail(ErrorCode::NotHomomorphic, "action does not preserve multiplication");
}

}  // namespace

ActionKernel action_kernel(const ActionSpec& spec) {
  certify_action(spec);
  int d = permutation_order(spec.generator_action);  // OrderCapExceeded on runaway
  if (!spec.acting.integer_line && spec.acting.modulus % d != 0)
    fail(ErrorCode::NotDividing, "automorphism order " + std::to_string(d) +
                                     " does not divide " +
                                     std::to_string(spec.acting.modulus));
  return ActionKernel{d, QuotientGroup(cycle_graph(d))};
}

FiniteSemidirect build_semidirect(const ActionSpec& spec) {
  ActionKernel kernel = action_kernel(spec);
  const QuotientGroup& h = spec.h_quotient;
  int d = kernel.order;
  int hn = h.order();

  // alpha_pow[s] = action of t^s
  std::vector<std::vector<int>> alpha_pow(d, std::vector<int>(hn));
  for (int v = 0; v < hn; ++v) alpha_pow[0][v] = v;
  for (int s = 1; s < d; ++s)
    for (int v = 0; v < hn; ++v) alpha_pow[s][v] = spec.generator_action[alpha_pow[s - 1][v]];

  // (h1,s1)(h2,s2) = (h1 * alpha^s1(h2), s1+s2); Cayley graph on
  // {(x_j, 0)} and (e, 1)
  LabeledMultigraph g;
  g.vertex_count = hn * d;
  g.basepoint = h.identity();
  int k = h.arity();
  for (int s = 0; s < d; ++s) {
    for (int v = 0; v < hn; ++v) {
      int idx = s * hn + v;
      for (int j = 0; j < k; ++j)
        g.edges.push_back(Edge{idx, s * hn + h.multiply(v, alpha_pow[s][h.generator(j)]), j});
      g.edges.push_back(Edge{idx, ((s + 1) % d) * hn + v, k});
    }
  }

  FiniteSemidirect fs{QuotientGroup(std::move(g)), {}, d};
  fs.h_part.resize(hn);
  for (int v = 0; v < hn; ++v) fs.h_part[v] = v;

  // normality of the s = 0 block
  const QuotientGroup& q = fs.group;
  for (int gamma = 0; gamma < q.order(); ++gamma)
    for (int v : fs.h_part)
      if (q.multiply(q.multiply(gamma, v), q.inverse(gamma)) >= hn)
        fail(ErrorCode::NotCayley, "h block is not normal");
  return fs;
}

ExtensionTriple extension_triple(const ActionSpec& spec) {
  FiniteSemidirect fs = build_semidirect(spec);
  int hn = spec.h_quotient.order();
  int d = fs.quotient_order;

  ExtensionTriple t{std::move(fs.group), std::move(fs.h_part),
                    QuotientGroup(cycle_graph(d)), {}, {}};
  t.pi.resize(t.gamma.order());
  for (int v = 0; v < t.gamma.order(); ++v) t.pi[v] = v / hn;

  // minimal-length preimage, ties broken by lowest vertex index
  std::vector<int> gamma_len = bfs_distances(t.gamma.graph(), t.gamma.identity());
  t.sigma.assign(d, -1);
  for (int s = 0; s < d; ++s) {
    int best = -1;
    for (int v = 0; v < t.gamma.order(); ++v)
      if (t.pi[v] == s && (best < 0 || gamma_len[v] < gamma_len[best])) best = v;
    t.sigma[s] = best;
  }
  certify_triple(t);
  return t;
}

void certify_triple(const ExtensionTriple& t) {
  const QuotientGroup& gamma = t.gamma;
  const QuotientGroup& g = t.g_quotient;
  if (static_cast<int>(t.pi.size()) != gamma.order() ||
      static_cast<int>(t.sigma.size()) != g.order())
    fail(ErrorCode::InvalidArgument, "triple table sizes inconsistent");

  for (int u = 0; u < gamma.order(); ++u)
    for (int v = 0; v < gamma.order(); ++v)
      if (t.pi[gamma.multiply(u, v)] != g.multiply(t.pi[u], t.pi[v]))
        fail(ErrorCode::NotHomomorphic, "pi is not a homomorphism");

  std::vector<bool> in_h(gamma.order(), false);
  for (int v : t.h_elements) in_h[v] = true;
  for (int v = 0; v < gamma.order(); ++v)
    if ((t.pi[v] == g.identity()) != in_h[v])
      fail(ErrorCode::InvalidArgument, "kernel of pi differs from h_elements");

  std::vector<int> gamma_len = bfs_distances(gamma.graph(), gamma.identity());
  std::vector<int> g_len = bfs_distances(g.graph(), g.identity());
  for (int s = 0; s < g.order(); ++s) {
    if (t.pi[t.sigma[s]] != s)
      fail(ErrorCode::InvalidArgument, "sigma is not a section of pi");
    if (gamma_len[t.sigma[s]] != g_len[s])
      fail(ErrorCode::InvalidArgument,
           "sigma does not preserve distance to the identity at " + std::to_string(s));
  }
  if (t.sigma[g.identity()] != gamma.identity())
    fail(ErrorCode::InvalidArgument, "sigma must fix the identity");
}

std::vector<ExtensionTriple> extension_tower(const std::vector<QuotientGroup>& h_levels,
                                             const std::vector<Word>& automorphism_images,
                                             ActingGroup acting) {
  std::vector<ExtensionTriple> triples;
  for (const QuotientGroup& h : h_levels) {
    std::vector<int> action = induced_automorphism(h, automorphism_images);
    triples.push_back(extension_triple(ActionSpec{h, acting, std::move(action)}));
  }
  double previous = -1.0;
  for (const ExtensionTriple& t : triples) {
    double diam = bfs_metric(t.gamma.graph()).diameter();
    if (diam <= previous)
      fail(ErrorCode::DiametersNotIncreasing,
           "component diameter " + std::to_string(diam) + " after " +
               std::to_string(previous));
    previous = diam;
  }
  return triples;
}

}  // namespace boxspace
