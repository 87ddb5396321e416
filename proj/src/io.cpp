#include "boxspace/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace boxspace::io {

std::string format_number(double v) {
  if (v == std::floor(v) && std::fabs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
    return buf;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json graph_to_json(const LabeledMultigraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges) edges.push_back({e.src, e.dst, e.label});
  return json{{"vertex_count", g.vertex_count},
              {"basepoint", g.basepoint},
              {"edges", edges}};
}

LabeledMultigraph graph_from_json(const json& j) {
  LabeledMultigraph g;
  try {
    g.vertex_count = j.at("vertex_count").get<int>();
    g.basepoint = j.at("basepoint").get<int>();
    for (const json& e : j.at("edges"))
      g.edges.push_back(Edge{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
  } catch (const json::exception& e) {
    fail(ErrorCode::IoError, std::string("bad graph JSON: ") + e.what());
  }
  g.validate();
  return g;
}

json tower_report_to_json(const TowerReport& t) {
  json girths = json::array();
  for (const auto& g : t.girths) {
    if (g)
      girths.push_back(*g);
    else
      girths.push_back(nullptr);
  }
  return json{{"sizes", t.sizes},
              {"girths", girths},
              {"diameters", t.diameters},
              {"truncated", t.truncated}};
}

json triple_to_json(const ExtensionTriple& t) {
  return json{{"gamma", graph_to_json(t.gamma.graph())},
              {"h_elements", t.h_elements},
              {"g", graph_to_json(t.g_quotient.graph())},
              {"pi", t.pi},
              {"sigma", t.sigma}};
}

json verdict_to_json(const VerdictReport& v) {
  return json{{"R", v.R},
              {"eps", v.eps},
              {"delta", v.delta},
              {"S_G", v.s_g},
              {"S_H", v.s_h},
              {"M_Gamma", v.m_gamma},
              {"N_R", v.n_r},
              {"min_margin_1", v.min_margin_1},
              {"min_margin_2", v.min_margin_2},
              {"pass", v.pass}};
}

json error_to_json(const Error& e) {
  return json{{"error", to_string(e.code())}, {"message", e.what()}};
}

json box_bundle_to_json(const BoxSpace& b, const std::vector<std::string>& metric_files) {
  if (metric_files.size() != b.components.size())
    fail(ErrorCode::InvalidArgument, "need one metric file per component");
  json components = json::array();
  for (size_t c = 0; c < b.components.size(); ++c)
    components.push_back(
        {{"metric", metric_files[c]}, {"basepoint", b.components[c].basepoint}});
  return json{{"components", components}, {"gaps", b.gaps}};
}

BoxSpace box_from_bundle(const json& bundle, const std::string& base_dir) {
  std::vector<BoxComponent> components;
  std::vector<double> gaps;
  try {
    for (const json& c : bundle.at("components")) {
      std::string path = c.at("metric").get<std::string>();
      if (!base_dir.empty()) path = base_dir + "/" + path;
      components.push_back(BoxComponent{metric_from_csv(read_text_file(path)),
                                        c.at("basepoint").get<int>()});
    }
    gaps = bundle.at("gaps").get<std::vector<double>>();
  } catch (const json::exception& e) {
    fail(ErrorCode::IoError, std::string("bad box bundle: ") + e.what());
  }
  return assemble(std::move(components), std::move(gaps));
}

std::string metric_to_csv(const MetricMatrix& m) {
  std::ostringstream out;
  for (int j = 0; j < m.size(); ++j) out << (j ? "," : "") << j;
  out << "\n";
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j)
      out << (j ? "," : "") << format_number(m.at(i, j));
    out << "\n";
  }
  return out.str();
}

MetricMatrix metric_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<double>> rows;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {  // header row lists point indices
      header = false;
      continue;
    }
    std::vector<double> row;
    std::stringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        fail(ErrorCode::IoError, "bad CSV cell '" + cell + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  int n = static_cast<int>(rows.size());
  if (n == 0) fail(ErrorCode::IoError, "empty metric CSV");
  MetricMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      fail(ErrorCode::IoError, "metric CSV is not square");
    for (int j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.at(i, j) != rows[i][j])
        fail(ErrorCode::IoError, "metric CSV is not symmetric");
  return m;
}

std::string walls_to_csv(const CoverData& c) {
  std::ostringstream out;
  for (size_t e = 0; e < c.base.edges.size(); ++e) out << (e ? "," : "") << "e" << e;
  out << "\n";
  for (const BitVec& row : c.walls) {
    for (int e = 0; e < row.size(); ++e) out << (e ? "," : "") << (row.get(e) ? 1 : 0);
    out << "\n";
  }
  return out.str();
}

std::string envelope_to_csv(const EnvelopePair& e) {
  std::ostringstream out;
  out << "t,rho_minus,rho_plus\n";
  for (size_t i = 0; i < e.t.size(); ++i)
    out << format_number(e.t[i]) << "," << format_number(e.rho_minus[i]) << ","
        << format_number(e.rho_plus[i]) << "\n";
  return out.str();
}

std::string point_cloud_to_csv(const PointCloud& p) {
  std::ostringstream out;
  for (const std::vector<double>& row : p.points) {
    for (size_t k = 0; k < row.size(); ++k)
      out << (k ? "," : "") << format_number(row[k]);
    out << "\n";
  }
  return out.str();
}

std::string gram_to_csv(const UnitVectorMap& m) {
  std::ostringstream out;
  int n = m.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out << (j ? "," : "") << format_number(m.inner(i, j));
    out << "\n";
  }
  return out.str();
}

std::string multiplication_table_to_csv(const QuotientGroup& q) {
  std::ostringstream out;
  for (int u = 0; u < q.order(); ++u) {
    for (int v = 0; v < q.order(); ++v)
      out << (v ? "," : "") << q.multiply(u, v);
    out << "\n";
  }
  return out.str();
}

json subgroup_to_json(const std::vector<int>& members) {
  return json{{"members", members}, {"order", members.size()}};
}

std::string graph_to_dot(const LabeledMultigraph& g) {
  std::ostringstream out;
  out << "digraph cayley {\n";
  out << "  " << g.basepoint << " [shape=doublecircle];\n";
  for (const Edge& e : g.edges)
    out << "  " << e.src << " -> " << e.dst << " [label=\"" << e.label << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot write '" + path + "'");
  out << text;
  if (!out) fail(ErrorCode::IoError, "short write to '" + path + "'");
}

}  // namespace boxspace::io
