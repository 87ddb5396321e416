#include "boxspace/group.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace boxspace {

Word Word::inverse() const {
  Word w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.push_back(Letter{it->gen, -it->sign});
  return w;
}

Word Word::reduced() const {
  Word w;
  for (const Letter& l : letters) {
    if (!w.letters.empty() && w.letters.back().gen == l.gen &&
        w.letters.back().sign == -l.sign)
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  return w;
}

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

QuotientGroup::QuotientGroup(LabeledMultigraph graph) : graph_(std::move(graph)) {
  graph_.validate();
  int n = graph_.vertex_count;
  if (n == 0) fail(ErrorCode::InvalidArgument, "empty quotient group");
  arity_ = graph_.label_arity();

  out_.assign(static_cast<size_t>(n) * arity_, -1);
  in_.assign(static_cast<size_t>(n) * arity_, -1);
  for (const Edge& e : graph_.edges) {
    size_t o = static_cast<size_t>(e.src) * arity_ + e.label;
    size_t i = static_cast<size_t>(e.dst) * arity_ + e.label;
    if (out_[o] >= 0)
      fail(ErrorCode::NotCayley, "two outgoing edges at vertex " +
                                     std::to_string(e.src) + " label " +
                                     std::to_string(e.label));
    if (in_[i] >= 0)
      fail(ErrorCode::NotCayley, "two incoming edges at vertex " +
                                     std::to_string(e.dst) + " label " +
                                     std::to_string(e.label));
    out_[o] = e.dst;
    in_[i] = e.src;
  }
  for (int x : out_)
    if (x < 0) fail(ErrorCode::NotCayley, "missing outgoing edge; not label-regular");
  for (int x : in_)
    if (x < 0) fail(ErrorCode::NotCayley, "missing incoming edge; not label-regular");

  // normal forms from the deterministic BFS tree
  tree_words_.assign(n, Word{});
  std::vector<bool> visited(n, false);
  std::queue<int> queue;
  Incidence inc(graph_);
  visited[identity()] = true;
  queue.push(identity());
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (auto [e, w] : inc.at[u]) {
      if (visited[w]) continue;
      visited[w] = true;
      int sign = (graph_.edges[e].src == u) ? +1 : -1;
      tree_words_[w] = tree_words_[u] * Word{{Letter{graph_.edges[e].label, sign}}};
      queue.push(w);
    }
  }
  for (bool v : visited)
    if (!v) fail(ErrorCode::DisconnectedGraph, "Cayley graph must be connected");

  // multiplication by walking normal forms; table cached for all pairs
  table_.assign(static_cast<size_t>(n) * n, -1);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      table_[static_cast<size_t>(u) * n + v] = evaluate_word_from(*this, u, tree_words_[v]);

  // Well-definedness certificate: walking any word spelling v from any u
  // must agree with the table. Checking every edge extension of every
  // normal form suffices by induction on word length.
  for (int v = 0; v < n; ++v) {
    for (int l = 0; l < arity_; ++l) {
      for (int sign : {+1, -1}) {
        int vl = step(v, l, sign);
        for (int u = 0; u < n; ++u) {
          if (step(multiply(u, v), l, sign) != multiply(u, vl))
            fail(ErrorCode::NotCayley,
                 "multiplication not well-defined at vertex " + std::to_string(u) +
                     " word " + std::to_string(v) + " label " + std::to_string(l));
        }
      }
    }
  }

  inverse_.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u)
      if (multiply(v, u) == identity() && multiply(u, v) == identity()) {
        inverse_[v] = u;
        break;
      }
    if (inverse_[v] < 0) fail(ErrorCode::NotCayley, "missing inverse");
  }
}

int QuotientGroup::generator(int j) const {
  if (j < 0 || j >= arity_) fail(ErrorCode::BadGenerator, "label " + std::to_string(j));
  return out_[static_cast<size_t>(identity()) * arity_ + j];
}

int QuotientGroup::step(int v, int label, int sign) const {
  if (label < 0 || label >= arity_)
    fail(ErrorCode::BadGenerator, "label " + std::to_string(label));
  return sign > 0 ? out_[static_cast<size_t>(v) * arity_ + label]
                  : in_[static_cast<size_t>(v) * arity_ + label];
}

int evaluate_word_from(const QuotientGroup& q, int start, const Word& w) {
  int v = start;
  for (const Letter& l : w.letters) v = q.step(v, l.gen, l.sign);
  return v;
}

int evaluate_word(const QuotientGroup& q, const Word& w) {
  return evaluate_word_from(q, q.identity(), w);
}

std::vector<int> subgroup_image(const QuotientGroup& q, const std::vector<Word>& gens) {
  std::vector<int> evaluated;
  for (const Word& w : gens) evaluated.push_back(evaluate_word(q, w));
  std::vector<int> elements;
  std::vector<bool> seen(q.order(), false);
  std::queue<int> queue;
  seen[q.identity()] = true;
  queue.push(q.identity());
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    elements.push_back(u);
    for (int g : evaluated) {
      for (int next : {q.multiply(u, g), q.multiply(u, q.inverse(g))}) {
        if (!seen[next]) {
          seen[next] = true;
          queue.push(next);
        }
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

std::vector<int> induced_automorphism(const QuotientGroup& q,
                                      const std::vector<Word>& images) {
  if (static_cast<int>(images.size()) != q.arity())
    fail(ErrorCode::BadGenerator, "need one image word per generator");
  std::vector<int> perm(q.order());
  for (int v = 0; v < q.order(); ++v) {
    Word substituted;
    for (const Letter& l : q.tree_word(v).letters) {
      const Word& im = images[l.gen];
      substituted = substituted * (l.sign > 0 ? im : im.inverse());
    }
    perm[v] = evaluate_word(q, substituted);
  }
  std::vector<bool> hit(q.order(), false);
  for (int v : perm) {
    if (hit[v]) fail(ErrorCode::NotBijective, "induced map is not a permutation");
    hit[v] = true;
  }
  for (int u = 0; u < q.order(); ++u)
    for (int v = 0; v < q.order(); ++v)
      if (perm[q.multiply(u, v)] != q.multiply(perm[u], perm[v]))
        fail(ErrorCode::NotHomomorphic, "image map does not preserve multiplication");
  return perm;
}

int permutation_order(const std::vector<int>& perm, int cap) {
  int n = static_cast<int>(perm.size());
  std::vector<int> power(n);
  for (int i = 0; i < n; ++i) power[i] = i;
  for (int ord = 1; ord <= cap; ++ord) {
    for (int i = 0; i < n; ++i) power[i] = perm[power[i]];
    bool is_identity = true;
    for (int i = 0; i < n; ++i)
      if (power[i] != i) {
        is_identity = false;
        break;
      }
    if (is_identity) return ord;
  }
  fail(ErrorCode::OrderCapExceeded, "permutation order exceeds " + std::to_string(cap));
}

void verify_group_axioms(const QuotientGroup& q) {
  int n = q.order(), e = q.identity();
  for (int a = 0; a < n; ++a) {
    if (q.multiply(e, a) != a || q.multiply(a, e) != a)
      fail(ErrorCode::NotCayley, "identity axiom fails");
    int inv = q.inverse(a);
    if (q.multiply(a, inv) != e || q.multiply(inv, a) != e)
      fail(ErrorCode::NotCayley, "inverse axiom fails");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = q.multiply(a, b);
      for (int c = 0; c < n; ++c)
        if (q.multiply(ab, c) != q.multiply(a, q.multiply(b, c)))
          fail(ErrorCode::NotCayley, "associativity fails");
    }
}

LabeledMultigraph cayley_on_words(const QuotientGroup& q, const std::vector<Word>& gens) {
  LabeledMultigraph g;
  g.vertex_count = q.order();
  g.basepoint = q.identity();
  for (int v = 0; v < q.order(); ++v)
    for (int j = 0; j < static_cast<int>(gens.size()); ++j)
      g.edges.push_back(Edge{v, q.multiply(v, evaluate_word(q, gens[j])), j});
  return g;
}

}  // namespace boxspace
