// Batch front door: builds towers, wall tables, embeddings and extension
// verdicts from builtin seeds or files. Exit codes: 0 pass, 2 usage/IO,
// 3 validation, 4 verification failure (error JSON on stderr).

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <string>

#include "boxspace/builtins.hpp"
#include "boxspace/io.hpp"

using namespace boxspace;
namespace fs = std::filesystem;

namespace {

LabeledMultigraph load_seed(const std::string& spec) {
  for (const std::string& name : builtin_seed_names())
    if (spec == name) return builtin_seed(spec);
  return io::graph_from_json(io::json::parse(io::read_text_file(spec)));
}

std::string out_path(const std::string& dir, const std::string& name) {
  if (dir.empty()) return name;
  fs::create_directories(dir);
  return (fs::path(dir) / name).string();
}

int run_tower(const std::string& seed_spec, int levels, long long cap,
              const std::string& out, const std::string& format) {
  TowerReport report = build_tower(load_seed(seed_spec), levels, cap);
  io::write_text_file(out_path(out, "report.json"),
                      io::tower_report_to_json(report).dump(2) + "\n");

  std::string csv = "level,size,girth,diameter\n";
  for (size_t i = 0; i < report.sizes.size(); ++i) {
    csv += std::to_string(i) + "," + std::to_string(report.sizes[i]) + ",";
    csv += report.girths[i] ? std::to_string(*report.girths[i]) : std::string("inf");
    csv += "," + std::to_string(report.diameters[i]) + "\n";
  }
  io::write_text_file(out_path(out, "levels.csv"), csv);

  for (size_t i = 0; format != "csv" && i < report.sizes.size(); ++i) {
    const LabeledMultigraph& g =
        i == 0 ? (report.levels.empty() ? load_seed(seed_spec) : report.levels[0].base)
               : report.levels[i - 1].cover;
    if (format == "dot")
      io::write_text_file(out_path(out, "level-" + std::to_string(i) + ".dot"),
                          io::graph_to_dot(g));
    else
      io::write_text_file(out_path(out, "level-" + std::to_string(i) + ".json"),
                          io::graph_to_json(g).dump() + "\n");
  }
  std::cout << io::tower_report_to_json(report).dump(2) << "\n";
  return 0;
}

int run_walls(const std::string& base_spec, long long cap, const std::string& out) {
  CoverData cover = homology_cover(load_seed(base_spec), cap);
  io::write_text_file(out_path(out, "walls.csv"), io::walls_to_csv(cover));
  io::json report = {
      {"agreement_radius", agreement_radius(cover)},
      {"deck_rank", cover.deck_rank},
      {"cover_vertices", cover.cover.vertex_count},
      {"base_two_edge_connected", cover.base_two_edge_connected},
  };
  auto base_girth = girth(cover.base);
  if (base_girth)
    report["girth_base"] = *base_girth;
  else
    report["girth_base"] = nullptr;
  if (!cover.base_two_edge_connected)
    report["warning"] = "base has a bridge; the wall metric may degenerate";
  io::write_text_file(out_path(out, "agreement.json"), report.dump(2) + "\n");
  std::cout << report.dump(2) << "\n";
  return 0;
}

int run_embed(const std::string& seed_spec, const std::string& metric_path,
              const std::string& builtin_metric, const std::string& box_path,
              int levels, long long cap, double t, const std::string& out) {
  if (!box_path.empty()) {
    BoxSpace box = io::box_from_bundle(io::json::parse(io::read_text_file(box_path)),
                                       fs::path(box_path).parent_path().string());
    MetricMatrix d = global_metric(box);
    io::json report = {{"points", d.size()},
                       {"negative_type_margin", negative_type_check(d)}};
    if (t > 0.0) {
      UnitVectorMap psi = gaussian_unit_map(d, t);
      io::write_text_file(out_path(out, "gram.csv"), io::gram_to_csv(psi));
    }
    std::cout << report.dump(2) << "\n";
    return 0;
  }
  if (!metric_path.empty() || !builtin_metric.empty()) {
    if (!builtin_metric.empty() && builtin_metric != "k23")
      fail(ErrorCode::InvalidArgument, "unknown builtin metric '" + builtin_metric + "'");
    MetricMatrix m = builtin_metric.empty()
                         ? io::metric_from_csv(io::read_text_file(metric_path))
                         : k23_metric();
    io::json report = {{"points", m.size()},
                       {"negative_type_margin", negative_type_check(m)}};
    if (t > 0.0) {
      UnitVectorMap psi = gaussian_unit_map(m, t);
      io::write_text_file(out_path(out, "gram.csv"), io::gram_to_csv(psi));
    }
    std::cout << report.dump(2) << "\n";
    return 0;
  }

  TowerReport tower = build_tower(load_seed(seed_spec), levels, cap);
  if (tower.levels.empty())
    fail(ErrorCode::InvalidArgument, "tower produced no covers to embed");
  WallBox wb = assemble_wall_box(tower);
  PointCloud cloud = wall_embedding(wb);
  MetricMatrix d = global_metric(wb.box);

  bool exact = true;
  for (int x = 0; x < d.size() && exact; ++x)
    for (int y = 0; y < d.size(); ++y) {
      long long sq = 0;
      for (int k = 0; k < cloud.dimension; ++k) {
        long long diff = static_cast<long long>(cloud.points[x][k]) -
                         static_cast<long long>(cloud.points[y][k]);
        sq += diff * diff;
      }
      if (sq != static_cast<long long>(d.at(x, y))) {
        exact = false;
        break;
      }
    }

  io::write_text_file(out_path(out, "cloud.csv"), io::point_cloud_to_csv(cloud));
  io::write_text_file(out_path(out, "wall-metric.csv"), io::metric_to_csv(d));
  std::vector<std::string> metric_files;
  for (size_t c = 0; c < wb.box.components.size(); ++c) {
    std::string name = "component-" + std::to_string(c) + ".csv";
    io::write_text_file(out_path(out, name),
                        io::metric_to_csv(wb.box.components[c].metric));
    metric_files.push_back(name);
  }
  io::write_text_file(out_path(out, "box.json"),
                      io::box_bundle_to_json(wb.box, metric_files).dump(2) + "\n");
  io::json report = {{"points", d.size()},
                     {"dimension", cloud.dimension},
                     {"negative_type_margin", negative_type_check(d)},
                     {"embedding_identity_exact", exact}};
  if (t > 0.0) {
    UnitVectorMap psi = gaussian_unit_map(d, t);
    io::write_text_file(out_path(out, "gram.csv"), io::gram_to_csv(psi));
  }
  io::write_text_file(out_path(out, "embed.json"), report.dump(2) + "\n");
  std::cout << report.dump(2) << "\n";
  return exact ? 0 : 4;
}

int run_ext_verify(const std::string& tower_name, double r, double eps, double delta,
                   double min_gap, double explicit_gap, double tol_psd,
                   double tol_norm, const std::string& out) {
  if (tower_name != "semidirect-swap")
    fail(ErrorCode::InvalidArgument, "unknown tower '" + tower_name + "'");
  ExtensionBoxes eb = swap_extension_boxes(min_gap, explicit_gap);
  lemma_dg_check(eb);
  PhiGamma phi = build_phi_gamma(eb, r, eps, tol_psd, tol_norm);
  VerdictReport verdict = verify_conditions(eb, phi, delta);
  io::json j = io::verdict_to_json(verdict);
  io::write_text_file(out_path(out, "verdict.json"), j.dump(2) + "\n");
  std::cout << j.dump(2) << "\n";
  return verdict.pass ? 0 : 4;
}

int run_envelope(const std::string& a_path, const std::string& b_path,
                 const std::string& builtin, const std::string& out) {
  MetricMatrix a, b;
  if (!builtin.empty()) {
    if (builtin != "ags-gensets")
      fail(ErrorCode::InvalidArgument, "unknown builtin pair '" + builtin + "'");
    TowerReport tower = ags_rose_tower();
    std::vector<Word> wide = {Word::gen(0), Word::gen(1),
                              Word::gen(0) * Word::gen(1)};
    std::vector<BoxComponent> narrow_comps, wide_comps;
    for (const CoverData& level : tower.levels) {
      QuotientGroup q(level.cover);
      narrow_comps.push_back({bfs_metric(q.graph()), q.identity()});
      wide_comps.push_back({bfs_metric(cayley_on_words(q, wide)), q.identity()});
    }
    std::vector<double> gaps;
    for (size_t k = 0; k + 1 < narrow_comps.size(); ++k)
      gaps.push_back(std::max({narrow_comps[k].metric.diameter(),
                               narrow_comps[k + 1].metric.diameter(),
                               wide_comps[k].metric.diameter(),
                               wide_comps[k + 1].metric.diameter()}) +
                     1.0);
    a = global_metric(assemble(narrow_comps, gaps));
    b = global_metric(assemble(wide_comps, gaps));
  } else {
    a = io::metric_from_csv(io::read_text_file(a_path));
    b = io::metric_from_csv(io::read_text_file(b_path));
  }
  EnvelopePair env = distortion_envelope(a, b);
  std::string csv = io::envelope_to_csv(env);
  io::write_text_file(out_path(out, "envelope.csv"), csv);
  std::cout << csv;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"box spaces, homology covers, wall metrics and embedding certificates"};
  app.require_subcommand(1);

  std::string seed = "ags-rose", base = "cycle4", out;
  std::string format = "json", metric_path, builtin_metric, box_path;
  std::string tower_name = "semidirect-swap";
  std::string env_a, env_b, env_builtin;
  int levels = 4;
  long long cap = kDefaultSizeCap;
  double r = 2.0, eps = 0.5, delta = 0.25, t = 0.0;
  double min_gap = kDefaultMinGap, explicit_gap = 0.0, tol_psd = 1e-8, tol_norm = 1e-9;

  CLI::App* tower = app.add_subcommand("tower", "iterate homology covers from a seed");
  tower->add_option("--seed", seed, "builtin name or graph JSON path");
  tower->add_option("--levels", levels, "max graphs in the chain");
  tower->add_option("--cap", cap, "vertex cap per cover");
  tower->add_option("--out", out, "output directory");
  tower->add_option("--format", format, "json|csv|dot for per-level output")
      ->check(CLI::IsMember({"json", "csv", "dot"}));

  CLI::App* walls = app.add_subcommand("walls", "wall table and agreement report");
  walls->add_option("--base", base, "builtin name or graph JSON path");
  walls->add_option("--cap", cap, "vertex cap");
  walls->add_option("--out", out, "output directory");

  CLI::App* embed = app.add_subcommand("embed", "wall embedding and negative-type margin");
  embed->add_option("--seed", seed, "builtin name or graph JSON path");
  embed->add_option("--metric", metric_path, "metric CSV instead of a tower");
  embed->add_option("--box", box_path, "box-space JSON bundle instead of a tower");
  embed->add_option("--builtin-metric", builtin_metric, "fixture name (k23)");
  embed->add_option("--levels", levels, "max graphs in the chain");
  embed->add_option("--cap", cap, "vertex cap");
  embed->add_option("--t", t, "also emit the Gaussian gram at this t");
  embed->add_option("--out", out, "output directory");

  CLI::App* ext = app.add_subcommand("ext-verify", "extension overlap/decay verdict");
  ext->add_option("--tower", tower_name, "builtin tower (semidirect-swap)");
  ext->add_option("--R", r, "close-pair radius");
  ext->add_option("--eps", eps, "overlap tolerance");
  ext->add_option("--delta", delta, "far-pair tolerance");
  ext->add_option("--min-gap", min_gap, "gap floor between components");
  ext->add_option("--gap", explicit_gap, "exact gap value (validated)");
  ext->add_option("--tol-psd", tol_psd, "kernel PSD tolerance");
  ext->add_option("--tol-norm", tol_norm, "unit-norm tolerance");
  ext->add_option("--out", out, "output directory");

  CLI::App* envelope = app.add_subcommand("envelope", "distortion envelopes of two metrics");
  envelope->add_option("metric_a", env_a, "first metric CSV");
  envelope->add_option("metric_b", env_b, "second metric CSV");
  envelope->add_option("--builtin", env_builtin, "builtin pair (ags-gensets)");
  envelope->add_option("--out", out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (tower->parsed()) return run_tower(seed, levels, cap, out, format);
    if (walls->parsed()) return run_walls(base, cap, out);
    if (embed->parsed())
      return run_embed(seed, metric_path, builtin_metric, box_path, levels, cap, t, out);
    if (ext->parsed())
      return run_ext_verify(tower_name, r, eps, delta, min_gap, explicit_gap,
                            tol_psd, tol_norm, out);
    if (envelope->parsed()) {
      if (env_builtin.empty() && (env_a.empty() || env_b.empty()))
        fail(ErrorCode::InvalidArgument, "need two metric CSVs or --builtin");
      return run_envelope(env_a, env_b, env_builtin, out);
    }
  } catch (const Error& e) {
    std::cerr << io::error_to_json(e).dump() << "\n";
    if (e.code() == ErrorCode::IoError) return 2;
    return is_validation(e.code()) ? 3 : 4;
  } catch (const io::json::exception& e) {
    std::cerr << io::json{{"error", "IoError"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << io::json{{"error", "Unexpected"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
  return 2;
}
