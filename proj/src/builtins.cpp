#include "boxspace/builtins.hpp"

namespace boxspace {

LabeledMultigraph rose(int loops) {
  LabeledMultigraph g;
  g.vertex_count = 1;
  g.basepoint = 0;
  for (int l = 0; l < loops; ++l) g.edges.push_back(Edge{0, 0, l});
  return g;
}

LabeledMultigraph cycle_graph(int n) {
  LabeledMultigraph g;
  g.vertex_count = n;
  g.basepoint = 0;
  for (int v = 0; v < n; ++v) g.edges.push_back(Edge{v, (v + 1) % n, 0});
  return g;
}

LabeledMultigraph theta_graph() {
  LabeledMultigraph g;
  g.vertex_count = 2;
  g.basepoint = 0;
  g.edges = {Edge{0, 1, 0}, Edge{0, 1, 1}, Edge{0, 1, 2}};
  return g;
}

LabeledMultigraph bridged_graph() {
  LabeledMultigraph g;
  g.vertex_count = 4;
  g.basepoint = 0;
  g.edges = {Edge{0, 1, 0}, Edge{1, 2, 0}, Edge{2, 0, 0}, Edge{0, 3, 1}};
  return g;
}

MetricMatrix k23_metric() {
  // points 0,1 on one side, 2,3,4 on the other
  MetricMatrix m(5);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      bool same_side = (i < 2 && j < 2) || (i >= 2 && j >= 2);
      m.set(i, j, same_side ? 2.0 : 1.0);
    }
  return m;
}

TowerReport ags_rose_tower(int max_levels, long long size_cap) {
  return build_tower(rose(2), max_levels, size_cap);
}

std::vector<QuotientGroup> tower_quotients(const TowerReport& t) {
  std::vector<QuotientGroup> levels;
  for (const CoverData& level : t.levels) levels.emplace_back(level.cover);
  return levels;
}

std::vector<Word> swap_images() { return {Word::gen(1), Word::gen(0)}; }

std::vector<ExtensionTriple> semidirect_swap_tower() {
  return extension_tower(tower_quotients(ags_rose_tower()), swap_images());
}

ExtensionBoxes swap_extension_boxes(double min_gap, double explicit_gap) {
  TowerReport tower = ags_rose_tower();
  std::vector<ExtensionTriple> triples =
      extension_tower(tower_quotients(tower), swap_images());
  return assemble_extension_boxes(std::move(triples), std::move(tower.levels),
                                  min_gap, explicit_gap);
}

LabeledMultigraph builtin_seed(const std::string& name) {
  if (name == "ags-rose") return rose(2);
  if (name == "cycle4") return cycle_graph(4);
  if (name == "theta") return theta_graph();
  if (name == "bridged") return bridged_graph();
  fail(ErrorCode::InvalidArgument, "unknown builtin seed '" + name + "'");
}

std::vector<std::string> builtin_seed_names() {
  return {"ags-rose", "cycle4", "theta", "bridged"};
}

}  // namespace boxspace
