#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <tuple>

#include "boxspace/builtins.hpp"
#include "boxspace/cover.hpp"
#include "boxspace/group.hpp"
#include "oracles.hpp"

using namespace boxspace;

namespace {

QuotientGroup klein4_from_cover() {
  return QuotientGroup(homology_cover(rose(2)).cover);
}

QuotientGroup level2_group() {
  TowerReport t = ags_rose_tower();
  return QuotientGroup(t.levels[1].cover);
}

Word word_of(std::initializer_list<Letter> ls) { return Word{ls}; }

}  // namespace

TEST_CASE("word reduction and inversion") {
  Word w = word_of({{0, +1}, {1, +1}, {1, -1}, {0, +1}});
  CHECK(w.reduced() == word_of({{0, +1}, {0, +1}}));
  CHECK(w.inverse() == word_of({{0, -1}, {1, +1}, {1, -1}, {0, -1}}));
  CHECK((Word::gen(0) * Word::gen(0).inverse()).reduced() == Word{});
}

TEST_CASE("word evaluation in the Klein four-group quotient") {
  QuotientGroup q = klein4_from_cover();
  CHECK(evaluate_word(q, Word{}) == q.identity());
  // a*a dies in an exponent-2 group; the direct-table oracle agrees
  oracle::Klein4 k;
  CHECK(evaluate_word(q, Word::gen(0) * Word::gen(0)) == q.identity());
  CHECK(k.mul(k.gen(0), k.gen(0)) == 0);
  // the commutator [a,b] dies in an abelian target
  Word comm = Word::gen(0) * Word::gen(1) * Word::gen(0).inverse() * Word::gen(1).inverse();
  CHECK(evaluate_word(q, comm) == q.identity());
  CHECK_THROWS_AS(evaluate_word(q, Word::gen(7)), Error);
}

TEST_CASE("multiplication table matches the direct Klein table") {
  QuotientGroup q = klein4_from_cover();
  oracle::Klein4 k;
  // identify vertices with masks through generator walks
  std::vector<int> to_mask(4, -1);
  to_mask[q.identity()] = 0;
  to_mask[q.generator(0)] = k.gen(0);
  to_mask[q.generator(1)] = k.gen(1);
  to_mask[q.multiply(q.generator(0), q.generator(1))] = k.mul(k.gen(0), k.gen(1));
  for (int u = 0; u < 4; ++u) {
    REQUIRE(to_mask[u] >= 0);
    for (int v = 0; v < 4; ++v)
      CHECK(to_mask[q.multiply(u, v)] == k.mul(to_mask[u], to_mask[v]));
  }
  for (int v = 0; v < 4; ++v) CHECK(q.multiply(q.identity(), v) == v);
}

TEST_CASE("group axioms hold exhaustively on desk-scale quotients") {
  verify_group_axioms(klein4_from_cover());
  verify_group_axioms(QuotientGroup(cycle_graph(6)));
  verify_group_axioms(level2_group());  // all 128^3 triples
}

TEST_CASE("evaluate_word is a homomorphism from free words") {
  QuotientGroup q = level2_group();
  // deterministic word pairs: enumerate short letter patterns
  std::vector<Word> words;
  for (int a = 0; a < 2; ++a)
    for (int sa : {+1, -1})
      for (int b = 0; b < 2; ++b)
        for (int sb : {+1, -1}) {
          words.push_back(word_of({{a, sa}, {b, sb}}));
          words.push_back(word_of({{a, sa}, {b, sb}, {a, -sa}}));
        }
  for (const Word& w1 : words)
    for (const Word& w2 : words)
      CHECK(evaluate_word(q, w1 * w2) ==
            q.multiply(evaluate_word(q, w1), evaluate_word(q, w2)));
}

TEST_CASE("subgroup images in the Klein four-group") {
  QuotientGroup q = klein4_from_cover();

  std::vector<int> cyclic = subgroup_image(q, {Word::gen(0)});
  CHECK(cyclic.size() == 2);
  CHECK(std::find(cyclic.begin(), cyclic.end(), q.identity()) != cyclic.end());
  CHECK(std::find(cyclic.begin(), cyclic.end(), q.generator(0)) != cyclic.end());

  // index-2 kernel generators {a^2, ab, ab^-1} land on the parity-zero pair
  std::vector<Word> kernel_gens = {
      Word::gen(0) * Word::gen(0),
      Word::gen(0) * Word::gen(1),
      Word::gen(0) * Word::gen(1).inverse(),
  };
  std::vector<int> image = subgroup_image(q, kernel_gens);
  CHECK(image.size() == 2);
  // oracle: enumerate masks of even popcount
  oracle::Klein4 k;
  int ab = q.multiply(q.generator(0), q.generator(1));
  std::vector<int> expect = {q.identity(), ab};
  std::sort(expect.begin(), expect.end());
  CHECK(image == expect);

  std::vector<int> whole = subgroup_image(q, {Word::gen(0), Word::gen(1)});
  CHECK(whole.size() == 4);
}

TEST_CASE("subgroup image sizes divide the group order") {
  QuotientGroup q2 = level2_group();
  std::vector<std::vector<Word>> generating_sets = {
      {},
      {Word::gen(0)},
      {Word::gen(1)},
      {Word::gen(0) * Word::gen(1)},
      {Word::gen(0), Word::gen(1)},
      {Word::gen(0) * Word::gen(0), Word::gen(0) * Word::gen(1)},
  };
  for (const auto& gens : generating_sets) {
    size_t size = subgroup_image(q2, gens).size();
    CHECK(q2.order() % size == 0);
  }
}

TEST_CASE("induced automorphisms of the Klein four-group") {
  QuotientGroup q = klein4_from_cover();

  std::vector<int> ident = induced_automorphism(q, {Word::gen(0), Word::gen(1)});
  for (int v = 0; v < 4; ++v) CHECK(ident[v] == v);

  std::vector<int> swap = induced_automorphism(q, {Word::gen(1), Word::gen(0)});
  CHECK(swap[q.identity()] == q.identity());
  CHECK(swap[q.generator(0)] == q.generator(1));
  CHECK(swap[q.generator(1)] == q.generator(0));
  int ab = q.multiply(q.generator(0), q.generator(1));
  CHECK(swap[ab] == ab);
  CHECK(permutation_order(swap) == 2);

  // oracle: the same swap on the direct table is mask-bit exchange
  oracle::Klein4 k;
  auto bitswap = [](int m) { return ((m & 1) << 1) | ((m >> 1) & 1); };
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      CHECK(bitswap(k.mul(x, y)) == k.mul(bitswap(x), bitswap(y)));
}

TEST_CASE("swap on the level-2 quotient is an involution") {
  QuotientGroup q = level2_group();
  std::vector<int> swap = induced_automorphism(q, {Word::gen(1), Word::gen(0)});
  CHECK(swap[q.identity()] == q.identity());
  CHECK(permutation_order(swap) == 2);
  bool moved = false;
  for (int v = 0; v < q.order(); ++v)
    if (swap[v] != v) moved = true;
  CHECK(moved);
}

TEST_CASE("tower quotients are vertex-transitive via left translations") {
  // left multiplication by any element permutes the labeled edge set
  TowerReport tower = ags_rose_tower();
  for (const CoverData& level : tower.levels) {
    QuotientGroup q(level.cover);
    std::vector<std::tuple<int, int, int>> edges;
    for (const Edge& e : q.graph().edges) edges.emplace_back(e.src, e.dst, e.label);
    std::sort(edges.begin(), edges.end());
    for (int v = 0; v < q.order(); ++v) {
      std::vector<std::tuple<int, int, int>> mapped;
      for (const Edge& e : q.graph().edges)
        mapped.emplace_back(q.multiply(v, e.src), q.multiply(v, e.dst), e.label);
      std::sort(mapped.begin(), mapped.end());
      CHECK(mapped == edges);
    }
  }
}

TEST_CASE("bad automorphism data is rejected") {
  QuotientGroup q = klein4_from_cover();
  // collapsing both generators onto a is not injective
  CHECK_THROWS_AS(induced_automorphism(q, {Word::gen(0), Word::gen(0)}), Error);
  CHECK_THROWS_AS(induced_automorphism(q, {Word::gen(0)}), Error);

  QuotientGroup z6(cycle_graph(6));
  // x -> x^2 is a non-bijective endomorphism of Z/6
  CHECK_THROWS_AS(induced_automorphism(z6, {Word::gen(0) * Word::gen(0)}), Error);
}

TEST_CASE("non-Cayley label-regular graphs are rejected") {
  // two labeled 3-cycles sharing no structure: label-regular but the
  // right-multiplication derived from tree words is ill-defined
  LabeledMultigraph g;
  g.vertex_count = 6;
  g.basepoint = 0;
  // label 0: 6-cycle; label 1: a permutation with mixed cycle structure
  for (int v = 0; v < 6; ++v) g.edges.push_back(Edge{v, (v + 1) % 6, 0});
  int perm[6] = {1, 0, 3, 4, 2, 5};  // (01)(234)(5): not right-translation
  for (int v = 0; v < 6; ++v) g.edges.push_back(Edge{v, perm[v], 1});
  CHECK_THROWS_AS((void)QuotientGroup(g), Error);
}

TEST_CASE("permutation order cap") {
  std::vector<int> cyc = {1, 2, 3, 4, 5, 6, 7, 0};
  CHECK(permutation_order(cyc) == 8);
  CHECK_THROWS_AS(permutation_order(cyc, 7), Error);
}

TEST_CASE("cayley_on_words rebuilds the group on a new generating set") {
  QuotientGroup q = klein4_from_cover();
  std::vector<Word> gens = {Word::gen(0), Word::gen(1), Word::gen(0) * Word::gen(1)};
  LabeledMultigraph g = cayley_on_words(q, gens);
  CHECK(g.edges.size() == 12);
  QuotientGroup q3(g);
  verify_group_axioms(q3);
  // the new metric is dominated by the old one
  MetricMatrix d2 = bfs_metric(g);
  MetricMatrix d1 = bfs_metric(q.graph());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(d2.at(i, j) <= d1.at(i, j));
}
