#pragma once

#include <string>
#include <vector>

#include "boxspace/cover.hpp"
#include "boxspace/graph.hpp"
#include "boxspace/extension.hpp"
#include "boxspace/semidirect.hpp"

namespace boxspace {

// Seed graphs and fixtures used by the CLI and the test suites. Shipped
// as code so every pipeline runs with zero external inputs.

// One vertex with `loops` labeled loops; rose(2) seeds the iterated
// homology tower over the free group on two generators.
LabeledMultigraph rose(int loops = 2);

// n-cycle on a single label: the Cayley graph of Z/n.
LabeledMultigraph cycle_graph(int n);

// Two vertices joined by three parallel edges (labels 0, 1, 2).
LabeledMultigraph theta_graph();

// Triangle with a pendant edge: connected but bridged.
LabeledMultigraph bridged_graph();

// Graph metric of the complete bipartite graph K_{2,3}: the smallest
// integer metric that fails the negative-type test.
MetricMatrix k23_metric();

// Tower over rose(2); with the default cap the fourth level trips it,
// truncating after sizes [1, 4, 128].
TowerReport ags_rose_tower(int max_levels = 4, long long size_cap = kDefaultSizeCap);

// Tower levels reinterpreted as finite groups (the covers, seed excluded).
std::vector<QuotientGroup> tower_quotients(const TowerReport& t);

// The generator exchange a <-> b, an involution of the free group that
// descends to every level of the rose tower.
std::vector<Word> swap_images();

// The two-triple tower behind the "semidirect-swap" builtin: rose tower
// levels 1-2 acted on by the generator swap, giving extensions of orders
// 8 and 256 over Z/2.
std::vector<ExtensionTriple> semidirect_swap_tower();

// The swap tower's four box spaces, wall kernel included.
ExtensionBoxes swap_extension_boxes(double min_gap = kDefaultMinGap,
                                    double explicit_gap = 0.0);

LabeledMultigraph builtin_seed(const std::string& name);  // "ags-rose"|"cycle4"|"theta"
std::vector<std::string> builtin_seed_names();

}  // namespace boxspace
