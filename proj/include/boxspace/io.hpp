#pragma once

#include <string>

#include <json.hpp>

#include "boxspace/box.hpp"
#include "boxspace/cover.hpp"
#include "boxspace/embedding.hpp"
#include "boxspace/extension.hpp"
#include "boxspace/graph.hpp"
#include "boxspace/group.hpp"

namespace boxspace::io {

using nlohmann::json;

// integers render without a decimal point; everything else as %.17g
std::string format_number(double v);

json graph_to_json(const LabeledMultigraph& g);
LabeledMultigraph graph_from_json(const json& j);

json tower_report_to_json(const TowerReport& t);

json triple_to_json(const ExtensionTriple& t);

json verdict_to_json(const VerdictReport& v);

json error_to_json(const Error& e);

// Bundle schema: {"components": [{"metric": "<csv file>", "basepoint": b},
// ...], "gaps": [...]}; metric files are resolved relative to base_dir.
json box_bundle_to_json(const BoxSpace& b, const std::vector<std::string>& metric_files);
BoxSpace box_from_bundle(const json& bundle, const std::string& base_dir);

std::string metric_to_csv(const MetricMatrix& m);
MetricMatrix metric_from_csv(const std::string& text);

std::string walls_to_csv(const CoverData& c);

std::string envelope_to_csv(const EnvelopePair& e);

std::string point_cloud_to_csv(const PointCloud& p);

std::string gram_to_csv(const UnitVectorMap& m);

std::string multiplication_table_to_csv(const QuotientGroup& q);

json subgroup_to_json(const std::vector<int>& members);

std::string graph_to_dot(const LabeledMultigraph& g);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace boxspace::io
