#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <tuple>

#include "boxspace/builtins.hpp"
#include "boxspace/cover.hpp"
#include "oracles.hpp"

using namespace boxspace;

namespace {

// Golden values for the rose tower, frozen from the Floyd-Warshall and QL
// oracles (recomputed below).
constexpr int kAgsLevel2Diameter = 8;
constexpr double kAgsLevel2Lambda2 = 0.809016994374948;

void check_wall_crossing_law(const CoverData& c) {
  for (size_t e = 0; e < c.cover.edges.size(); ++e) {
    const Edge& edge = c.cover.edges[e];
    BitVec expect = c.walls[edge.src];
    expect.flip(c.edge_projection[e]);
    CHECK(c.walls[edge.dst] == expect);
  }
}

void check_sheet_formula(const CoverData& c) {
  CHECK(c.cover.vertex_count == c.base.vertex_count * (1LL << c.deck_rank));
  CHECK(c.cover.edges.size() == c.base.edges.size() * (1ULL << c.deck_rank));
  CHECK(c.deck_rank ==
        static_cast<int>(c.base.edges.size()) - c.base.vertex_count + 1);
}

void check_projections(const CoverData& c) {
  for (size_t e = 0; e < c.cover.edges.size(); ++e) {
    const Edge& ce = c.cover.edges[e];
    const Edge& be = c.base.edges[c.edge_projection[e]];
    CHECK(c.vertex_projection[ce.src] == be.src);
    CHECK(c.vertex_projection[ce.dst] == be.dst);
    CHECK(ce.label == be.label);
  }
  CHECK(c.vertex_projection[c.cover.basepoint] == c.base.basepoint);
  CHECK(c.walls[c.cover.basepoint].popcount() == 0);
}

void check_wall_below_graph_metric(const CoverData& c) {
  MetricMatrix dw = wall_metric(c);
  MetricMatrix dg = bfs_metric(c.cover);
  for (int i = 0; i < dw.size(); ++i)
    for (int j = 0; j < dw.size(); ++j) CHECK(dw.at(i, j) <= dg.at(i, j));
}

void check_deck_transformations(const CoverData& c) {
  if (c.cover.vertex_count > 128) return;
  long long sheets = 1LL << c.deck_rank;
  auto key = [](const Edge& e) { return std::tuple(e.src, e.dst, e.label); };
  std::vector<std::tuple<int, int, int>> edges;
  for (const Edge& e : c.cover.edges) edges.push_back(key(e));
  std::sort(edges.begin(), edges.end());
  for (long long t = 0; t < sheets; ++t) {
    std::vector<std::tuple<int, int, int>> translated;
    for (const Edge& e : c.cover.edges) {
      auto shift = [&](int v) {
        long long base = v / sheets, x = v % sheets;
        return static_cast<int>(base * sheets + (x ^ t));
      };
      translated.push_back(std::tuple(shift(e.src), shift(e.dst), e.label));
    }
    std::sort(translated.begin(), translated.end());
    CHECK(translated == edges);
  }
}

void check_spectral_pullback(const CoverData& c) {
  std::vector<double> base_spec = spectrum(c.base);
  std::vector<double> cover_spec = spectrum(c.cover);
  for (double lb : base_spec) {
    bool found = false;
    for (double lc : cover_spec)
      if (std::fabs(lb - lc) <= 1e-8) found = true;
    CHECK(found);
  }
}

}  // namespace

TEST_CASE("rose cover is the Klein four-group Cayley multigraph") {
  CoverData c = homology_cover(rose(2));
  CHECK(c.deck_rank == 2);
  CHECK(c.cover.vertex_count == 4);
  CHECK(c.cover.edges.size() == 8);
  CHECK(cayley_label_isomorphic(c.cover, oracle::Klein4().cayley()));
  check_sheet_formula(c);
  check_projections(c);
  check_wall_crossing_law(c);
}

TEST_CASE("4-cycle cover is the 8-cycle") {
  CoverData c = homology_cover(cycle_graph(4));
  CHECK(c.deck_rank == 1);
  CHECK(c.cover.vertex_count == 8);
  // isomorphism search for a cycle: connected, 2-regular, girth = size
  auto fw = oracle::fw_metric(c.cover);
  for (auto& row : fw)
    for (int d : row) CHECK(d >= 0);
  for (int v = 0; v < 8; ++v) CHECK(vertex_degree(c.cover, v) == 2);
  CHECK(girth(c.cover) == 8);
  check_wall_crossing_law(c);
}

TEST_CASE("theta cover has 8 vertices, 12 edges, deck rank 2") {
  CoverData c = homology_cover(theta_graph());
  CHECK(c.deck_rank == 2);
  CHECK(c.cover.vertex_count == 8);
  CHECK(c.cover.edges.size() == 12);
  auto fw = oracle::fw_metric(c.cover);  // oracle connectivity
  for (auto& row : fw)
    for (int d : row) CHECK(d >= 0);
  check_sheet_formula(c);
  check_wall_crossing_law(c);
}

TEST_CASE("wall metric equals graph metric on the 8-cycle cover") {
  CoverData c = homology_cover(cycle_graph(4));
  MetricMatrix dw = wall_metric(c);
  MetricMatrix dg = bfs_metric(c.cover);
  for (int i = 0; i < 8; ++i) {
    CHECK(dw.at(i, i) == 0.0);
    for (int j = 0; j < 8; ++j) CHECK(dw.at(i, j) == dg.at(i, j));
  }
  // adjacent cover vertices are separated by exactly one wall
  for (const Edge& e : c.cover.edges) CHECK(dw.at(e.src, e.dst) == 1.0);
  CHECK(agreement_radius(c) >= 4);
}

TEST_CASE("agreement radius reaches at least the base girth") {
  CHECK(agreement_radius(homology_cover(theta_graph())) >= 2);

  TowerReport t = ags_rose_tower();
  REQUIRE(t.levels.size() == 2);
  CHECK(agreement_radius(t.levels[0]) >= 1);
  CHECK(agreement_radius(t.levels[1]) >= 2);  // girth of the level-1 base
}

TEST_CASE("rose tower sizes, ranks, girths, diameters") {
  TowerReport t = ags_rose_tower();
  CHECK(t.sizes == std::vector<int>{1, 4, 128});
  CHECK(t.truncated);  // level 3 would need 128 * 2^129 vertices
  REQUIRE(t.levels.size() == 2);
  CHECK(t.levels[0].deck_rank == 2);
  CHECK(t.levels[1].deck_rank == 5);
  CHECK(t.girths[0] == 1);
  CHECK(t.girths[1] == 2);
  CHECK(t.girths[2] == 4);
  CHECK(t.diameters == std::vector<int>{0, 2, kAgsLevel2Diameter});
  CHECK(oracle::fw_diameter(t.levels[1].cover) == kAgsLevel2Diameter);
  // Nielsen-Schreier: rank of the level-1 graph re-derived as 1 + 4*(2-1)
  CHECK(t.levels[1].deck_rank == 1 + t.sizes[1] * (rose(2).label_arity() - 1));
}

TEST_CASE("level-2 lambda_2 matches the frozen golden value and the oracle") {
  TowerReport t = ags_rose_tower();
  std::vector<double> spec = spectrum(t.levels[1].cover);
  CHECK(spec[1] == doctest::Approx(kAgsLevel2Lambda2).epsilon(1e-9));
  std::vector<double> ref = oracle::spectrum(t.levels[1].cover);
  CHECK(spec[1] == doctest::Approx(ref[1]).epsilon(1e-10));
}

TEST_CASE("cycle tower: covers of cycles are cycles") {
  TowerReport t = build_tower(cycle_graph(4), 5);
  CHECK(t.sizes == std::vector<int>{4, 8, 16, 32, 64});
  for (const CoverData& level : t.levels) CHECK(level.deck_rank == 1);
  std::vector<std::optional<int>> want = {4, 8, 16, 32, 64};
  CHECK(t.girths == want);
  CHECK_FALSE(t.truncated);
}

TEST_CASE("theta tower grows by the sheet-count formula") {
  TowerReport t = build_tower(theta_graph(), 3);
  CHECK(t.sizes == std::vector<int>{2, 8, 256});
  for (const CoverData& level : t.levels) {
    check_sheet_formula(level);
    auto fw = oracle::fw_metric(level.cover);
    for (auto& row : fw)
      for (int d : row) CHECK(d >= 0);
  }
}

TEST_CASE("cover invariants across all desk towers") {
  std::vector<TowerReport> towers;
  towers.push_back(ags_rose_tower());
  towers.push_back(build_tower(cycle_graph(4), 5));
  towers.push_back(build_tower(theta_graph(), 3));
  for (const TowerReport& t : towers) {
    for (const CoverData& level : t.levels) {
      CHECK(level.base_two_edge_connected);
      check_sheet_formula(level);
      check_wall_crossing_law(level);
      check_projections(level);
      if (level.cover.vertex_count <= 128) check_wall_below_graph_metric(level);
      check_deck_transformations(level);
      if (level.cover.vertex_count <= 128) check_spectral_pullback(level);
      // covers never shrink the girth
      auto gb = girth(level.base), gc = girth(level.cover);
      REQUIRE(gb.has_value());
      REQUIRE(gc.has_value());
      CHECK(*gc >= *gb);
    }
    // girths strictly increase along each tower
    for (size_t i = 0; i + 1 < t.girths.size(); ++i)
      CHECK(*t.girths[i] < *t.girths[i + 1]);
    // sizes strictly increase
    for (size_t i = 0; i + 1 < t.sizes.size(); ++i) CHECK(t.sizes[i] < t.sizes[i + 1]);
  }
}

TEST_CASE("metric axioms hold on every tower metric up to 256 points") {
  for (const TowerReport& t :
       {ags_rose_tower(), build_tower(cycle_graph(4), 5), build_tower(theta_graph(), 3)}) {
    for (const CoverData& level : t.levels) {
      bfs_metric(level.cover).check_metric_axioms();
      wall_metric(level).check_metric_axioms();
    }
  }
}

TEST_CASE("bridged bases warn but still produce a cover") {
  CoverData c = homology_cover(bridged_graph());
  CHECK_FALSE(c.base_two_edge_connected);
  CHECK(c.deck_rank == 1);
  CHECK(c.cover.vertex_count == 8);
  check_wall_crossing_law(c);
}

TEST_CASE("size cap trips cleanly") {
  CHECK_THROWS_AS(homology_cover(oracle::Klein4().cayley(), 100), Error);
  TowerReport t = build_tower(rose(2), 10, 1000);
  CHECK(t.truncated);
  CHECK(t.sizes == std::vector<int>{1, 4, 128});
}

TEST_CASE("homology cover of a disconnected base fails") {
  LabeledMultigraph g;
  g.vertex_count = 2;
  CHECK_THROWS_AS(homology_cover(g), Error);
}
