#pragma once

#include <vector>

#include "boxspace/graph.hpp"

namespace boxspace {

// A letter is a signed generator; a word is a product of letters.
struct Letter {
  int gen;
  int sign;  // +1 or -1

  bool operator==(const Letter&) const = default;
};

struct Word {
  std::vector<Letter> letters;

  static Word gen(int j) { return Word{{Letter{j, +1}}}; }
  Word inverse() const;
  Word reduced() const;  // free reduction of adjacent cancelling pairs

  friend Word operator*(const Word& a, const Word& b);
  bool operator==(const Word&) const = default;
};

// A finite group presented as its Cayley multigraph. Elements are graph
// vertices; each vertex's normal form is the label word of its BFS tree
// path from the identity. Construction certifies label-regularity and
// well-definedness of the induced multiplication (the graph really is a
// Cayley graph), then caches the full multiplication table.
class QuotientGroup {
 public:
  explicit QuotientGroup(LabeledMultigraph graph);

  const LabeledMultigraph& graph() const { return graph_; }
  int order() const { return graph_.vertex_count; }
  int identity() const { return graph_.basepoint; }
  int arity() const { return arity_; }

  int multiply(int u, int v) const {
    return table_[static_cast<size_t>(u) * order() + v];
  }
  int inverse(int v) const { return inverse_[v]; }
  int generator(int j) const;  // vertex reached by one j-step from the identity
  const Word& tree_word(int v) const { return tree_words_[v]; }

  // one edge-walk; sign -1 follows the unique incoming edge backwards
  int step(int v, int label, int sign) const;

 private:
  LabeledMultigraph graph_;
  int arity_ = 0;
  std::vector<int> out_, in_;  // v*arity + label -> vertex
  std::vector<Word> tree_words_;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

// Endpoint of the edge path spelled by w starting at the identity; this
// realizes the quotient homomorphism from the free group.
int evaluate_word(const QuotientGroup& q, const Word& w);
int evaluate_word_from(const QuotientGroup& q, int start, const Word& w);

// Closure of the identity under right multiplication by the evaluated
// generators and their inverses, sorted. The image subgroup HK/K.
std::vector<int> subgroup_image(const QuotientGroup& q, const std::vector<Word>& gens);

// Vertex permutation induced by generator -> images[generator] on normal
// forms; certified bijective and multiplication-preserving.
std::vector<int> induced_automorphism(const QuotientGroup& q,
                                      const std::vector<Word>& images);

int permutation_order(const std::vector<int>& perm, int cap = 1 << 16);

// Exhaustive associativity/identity/inverse check over the cached table.
void verify_group_axioms(const QuotientGroup& q);

// Cayley multigraph of the same group on a new generating set given by
// words in the old one.
LabeledMultigraph cayley_on_words(const QuotientGroup& q, const std::vector<Word>& gens);

}  // namespace boxspace
