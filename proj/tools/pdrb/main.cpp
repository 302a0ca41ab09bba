// pdrb: persistence diagram distances, barycenters, clustering and dictionary
// encoding from the command line.
//
// Exit codes: 0 success, 1 I/O or malformed input, 2 parameter contract
// violation, 3 numerical failure.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pdrb/barycenter.hpp"
#include "pdrb/clustering.hpp"
#include "pdrb/dictionary.hpp"
#include "pdrb/io.hpp"
#include "pdrb/metric.hpp"
#include "pdrb/persistence.hpp"
#include "pdrb/svg.hpp"
#include "pdrb/synthetic.hpp"

namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kIo = 1, kContract = 2, kNumerical = 3 };

struct Options {
  std::vector<std::string> inputs;
  std::string out;
  std::string out_dir = ".";
  double q = 2.0;
  std::size_t T = 10;
  double epsilon = 0.0;
  std::size_t k = 2;
  std::size_t m = 3;
  std::uint64_t seed = pdrb::kDefaultOutlierSeed;
  std::string connectivity = "full";
  bool svg = false;
  bool unsafe_q1 = false;
  std::vector<double> weights;
  std::optional<std::size_t> top_k;
  std::string truth;
  std::string labels;
  std::string spec;
  std::size_t epochs = 200;
};

std::vector<pdrb::PersistenceDiagram> read_diagrams(const std::vector<std::string>& paths) {
  std::vector<pdrb::PersistenceDiagram> out;
  for (const auto& p : paths) out.push_back(pdrb::read_diagram_csv(p));
  return out;
}

std::vector<std::string> names_of(const std::vector<pdrb::PersistenceDiagram>& diagrams) {
  std::vector<std::string> names;
  for (const auto& d : diagrams) names.push_back(d.label().value_or(""));
  return names;
}

fs::path sibling(const fs::path& path, const std::string& extension) {
  auto p = path;
  return p.replace_extension(extension);
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw pdrb::IoError("cannot create directory " + dir.string());
}

pdrb::BarycenterConfig barycenter_config(const Options& o) {
  pdrb::BarycenterConfig c;
  c.q = o.q;
  c.max_outer_iters = o.T;
  c.epsilon = o.epsilon;
  c.allow_q1 = o.unsafe_q1;
  return c;
}

std::vector<double> simplex_weights(const std::vector<double>& raw, std::size_t n) {
  if (raw.empty()) return {};
  if (raw.size() != n) throw std::invalid_argument("--weights needs one value per input diagram");
  double sum = 0.0;
  for (double w : raw) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("--weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("--weights must sum to 1 (within 1e-9)");
  std::vector<double> out = raw;
  for (double& w : out) w /= sum;
  return out;
}

void require_q(const Options& o) {
  pdrb::require_valid_q(o.q);
  if (o.q == 1.0 && !o.unsafe_q1)
    throw std::invalid_argument(
        "q = 1 barycenters are not unique in general and the fixed-point iteration can be numerically "
        "unstable; pass --unsafe-q1 to run anyway");
}

pdrb::RunManifest manifest_for(const std::string& command, const Options& o) {
  pdrb::RunManifest m;
  m.command = command;
  m.inputs = o.inputs;
  return m;
}

void write_manifest(const fs::path& path, pdrb::RunManifest manifest) {
  manifest.outputs.push_back(path.filename().string());
  pdrb::write_file_atomic(path, pdrb::manifest_json(manifest));
}

void emit(const fs::path& path, const std::string& content, pdrb::RunManifest& manifest) {
  pdrb::write_file_atomic(path, content);
  manifest.outputs.push_back(path.filename().string());
}

void cmd_extract(const Options& o) {
  const auto grid = pdrb::read_grid(o.inputs.at(0));
  const auto conn = o.connectivity == "axis" ? pdrb::Connectivity::Axis : pdrb::Connectivity::Full;
  auto diagram = pdrb::prune(pdrb::extract_max_pairs(grid, conn), o.epsilon);
  if (o.top_k) diagram = pdrb::threshold_top_k(diagram, *o.top_k);

  auto manifest = manifest_for("extract", o);
  manifest.parameters = {{"connectivity", o.connectivity}, {"epsilon", pdrb::format_number(o.epsilon)}};
  if (o.top_k) manifest.parameters["top_k"] = std::to_string(*o.top_k);
  manifest.results["pairs"] = static_cast<double>(diagram.size());
  emit(o.out, pdrb::diagram_csv(diagram), manifest);
  write_manifest(sibling(o.out, ".manifest.json"), manifest);
}

void cmd_dist(const Options& o) {
  pdrb::require_valid_q(o.q);
  const auto diagrams = read_diagrams(o.inputs);
  const auto matrix = pdrb::distance_matrix(diagrams, o.q);
  auto manifest = manifest_for("dist", o);
  manifest.parameters = {{"q", pdrb::format_number(o.q)}, {"svg", o.svg ? "true" : "false"}};
  emit(o.out, pdrb::distance_matrix_csv(matrix), manifest);
  if (o.svg) emit(sibling(o.out, ".svg"), pdrb::svg_heatmap(matrix, names_of(diagrams)), manifest);
  write_manifest(sibling(o.out, ".manifest.json"), manifest);
}

void cmd_bary(const Options& o) {
  require_q(o);
  const auto diagrams = read_diagrams(o.inputs);
  auto config = barycenter_config(o);
  config.weights = simplex_weights(o.weights, diagrams.size());
  const auto result = pdrb::compute_barycenter(diagrams, config);
  for (double e : result.energy_trace)
    if (!std::isfinite(e)) throw std::domain_error("barycenter energy is not finite");

  auto manifest = manifest_for("bary", o);
  manifest.parameters = {{"q", pdrb::format_number(o.q)},
                         {"T", std::to_string(o.T)},
                         {"epsilon", pdrb::format_number(o.epsilon)},
                         {"unsafe_q1", o.unsafe_q1 ? "true" : "false"}};
  if (!config.weights.empty()) {
    std::string w;
    for (double x : config.weights) w += (w.empty() ? "" : ",") + pdrb::format_number(x);
    manifest.parameters["weights"] = w;
  }
  manifest.results["energy"] = result.energy_trace.back();
  manifest.results["iterations"] = static_cast<double>(result.iterations);
  manifest.results["converged"] = result.converged ? 1.0 : 0.0;
  emit(o.out, pdrb::diagram_csv(result.diagram), manifest);
  emit(sibling(o.out, ".trace.json"), pdrb::number_array_json(result.energy_trace), manifest);
  write_manifest(sibling(o.out, ".manifest.json"), manifest);
}

void cmd_cluster(const Options& o) {
  require_q(o);
  const auto diagrams = read_diagrams(o.inputs);
  pdrb::KMeansConfig config;
  config.barycenter = barycenter_config(o);
  config.barycenter.epsilon = 0.0;
  const auto result = pdrb::kmeans(diagrams, o.k, o.q, config, o.seed);

  const fs::path dir = o.out_dir;
  ensure_dir(dir);
  auto manifest = manifest_for("cluster", o);
  manifest.parameters = {{"q", pdrb::format_number(o.q)},
                         {"k", std::to_string(o.k)},
                         {"seed", std::to_string(o.seed)},
                         {"T", std::to_string(o.T)},
                         {"unsafe_q1", o.unsafe_q1 ? "true" : "false"}};
  manifest.results["energy"] = result.total_energy;
  manifest.results["iterations"] = static_cast<double>(result.iterations);
  if (!o.truth.empty()) {
    const auto truth = pdrb::parse_labels(pdrb::read_text_file(o.truth), o.truth);
    if (truth.size() != diagrams.size()) throw pdrb::IoError(o.truth + ": one label per input diagram is required");
    manifest.parameters["truth"] = o.truth;
    manifest.results["ari"] = pdrb::adjusted_rand_index(truth, result.labels);
  }
  emit(dir / "labels.csv", pdrb::labels_csv(result.labels), manifest);
  for (std::size_t c = 0; c < result.centroids.size(); ++c)
    emit(dir / ("centroid_" + std::to_string(c) + ".csv"), pdrb::diagram_csv(result.centroids[c]), manifest);
  write_manifest(dir / "manifest.json", manifest);
}

void cmd_encode(const Options& o) {
  pdrb::require_valid_q(o.q);
  if (o.q <= 1.0) throw std::invalid_argument("encoding needs q > 1");
  const auto diagrams = read_diagrams(o.inputs);
  pdrb::EncodeConfig config;
  config.max_epochs = o.epochs;
  config.barycenter = barycenter_config(o);
  config.barycenter.epsilon = 0.0;
  config.kmeans.barycenter = config.barycenter;
  const auto result = pdrb::encode(diagrams, o.m, o.q, config, o.seed);

  const fs::path dir = o.out_dir;
  ensure_dir(dir);
  auto manifest = manifest_for("encode", o);
  manifest.parameters = {{"q", pdrb::format_number(o.q)},
                         {"m", std::to_string(o.m)},
                         {"seed", std::to_string(o.seed)},
                         {"T", std::to_string(o.T)},
                         {"epochs", std::to_string(o.epochs)}};
  manifest.results["initial_energy"] = result.energy_trace.front();
  manifest.results["final_energy"] = result.energy_trace.back();
  manifest.results["epochs"] = static_cast<double>(result.epochs);

  pdrb::EncodingBundle bundle;
  bundle.q = o.q;
  for (std::size_t j = 0; j < result.dictionary.atoms.size(); ++j) {
    const std::string name = "atom_" + std::to_string(j) + ".csv";
    emit(dir / name, pdrb::diagram_csv(result.dictionary.atoms[j]), manifest);
    bundle.atom_files.push_back(name);
  }
  bundle.inputs = names_of(diagrams);
  bundle.coefficients = result.coefficients;
  bundle.energy_trace = result.energy_trace;
  emit(dir / "bundle.json", pdrb::bundle_json(bundle), manifest);
  write_manifest(dir / "manifest.json", manifest);
}

void cmd_layout(const Options& o) {
  const fs::path bundle_path = o.inputs.at(0);
  const auto bundle = pdrb::parse_bundle(pdrb::read_text_file(bundle_path), bundle_path.string());
  pdrb::Dictionary dictionary;
  for (const auto& f : bundle.atom_files) dictionary.atoms.push_back(pdrb::read_diagram_csv(bundle_path.parent_path() / f));
  if (dictionary.atoms.size() != 3)
    throw std::invalid_argument("the planar layout needs a dictionary of exactly 3 atoms (got " +
                                std::to_string(dictionary.atoms.size()) + ")");
  const auto layout = pdrb::planar_layout(dictionary, bundle.coefficients, bundle.q);
  if (layout.clamped) std::cerr << "warning: atom distances violate the triangle inequality; radicand clamped to 0\n";

  std::vector<std::string> labels = bundle.inputs;
  if (!o.labels.empty()) {
    const auto ids = pdrb::parse_labels(pdrb::read_text_file(o.labels), o.labels);
    if (ids.size() != labels.size()) throw pdrb::IoError(o.labels + ": one label per encoded input is required");
    for (std::size_t i = 0; i < ids.size(); ++i) labels[i] = std::to_string(ids[i]);
  }

  std::string csv = "x,y,label\n";
  for (std::size_t i = 0; i < layout.points.size(); ++i)
    csv += pdrb::format_number(layout.points[i].x) + "," + pdrb::format_number(layout.points[i].y) + "," +
           labels[i] + "\n";

  const fs::path dir = o.out_dir;
  ensure_dir(dir);
  auto manifest = manifest_for("layout", o);
  manifest.parameters = {{"q", pdrb::format_number(bundle.q)}};
  if (!o.labels.empty()) manifest.parameters["labels"] = o.labels;
  manifest.results["clamped"] = layout.clamped ? 1.0 : 0.0;
  emit(dir / "layout.csv", csv, manifest);
  emit(dir / "layout.svg", pdrb::svg_layout(layout, labels), manifest);
  write_manifest(dir / "manifest.json", manifest);
}

void cmd_plot(const Options& o) {
  const auto diagrams = read_diagrams(o.inputs);
  auto manifest = manifest_for("plot", o);
  emit(o.out, pdrb::svg_diagram_plot(diagrams, names_of(diagrams)), manifest);
  write_manifest(sibling(o.out, ".manifest.json"), manifest);
}

void cmd_synth(const Options& o) {
  const auto spec = o.spec.empty() ? pdrb::default_outlier_spec()
                                   : pdrb::parse_ensemble_spec(pdrb::read_text_file(o.spec), o.spec);
  const auto ensemble = pdrb::make_outlier_ensemble(spec, o.seed);
  const auto conn = o.connectivity == "axis" ? pdrb::Connectivity::Axis : pdrb::Connectivity::Full;

  const fs::path dir = o.out_dir;
  ensure_dir(dir);
  auto manifest = manifest_for("synth", o);
  if (!o.spec.empty()) manifest.inputs = {o.spec};
  manifest.parameters = {{"seed", std::to_string(o.seed)},
                         {"connectivity", o.connectivity},
                         {"epsilon", pdrb::format_number(o.epsilon)}};
  for (std::size_t i = 0; i < ensemble.grids.size(); ++i) {
    const std::string id = (i < 10 ? "0" : "") + std::to_string(i);
    emit(dir / ("grid_" + id + ".txt"), pdrb::grid_text(ensemble.grids[i]), manifest);
    const auto diagram = pdrb::prune(pdrb::extract_max_pairs(ensemble.grids[i], conn), o.epsilon);
    emit(dir / ("diagram_" + id + ".csv"), pdrb::diagram_csv(diagram), manifest);
  }
  emit(dir / "truth.csv", pdrb::labels_csv(ensemble.labels), manifest);
  std::string flags;
  for (bool b : ensemble.outlier) flags += b ? "1\n" : "0\n";
  emit(dir / "outliers.csv", flags, manifest);
  emit(dir / "spec.json", pdrb::ensemble_spec_json(spec), manifest);
  write_manifest(dir / "manifest.json", manifest);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust Wasserstein barycenters of persistence diagrams"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pdrb::version()));

  Options o;
  std::function<void(const Options&)> action;

  auto add_q = [&](CLI::App* sub) { sub->add_option("--q", o.q, "Wasserstein exponent (>= 1)")->capture_default_str(); };
  auto add_unsafe = [&](CLI::App* sub) {
    sub->add_flag("--unsafe-q1", o.unsafe_q1, "Allow q = 1 despite non-unique ground barycenters");
  };
  auto add_T = [&](CLI::App* sub) {
    sub->add_option("--T", o.T, "Maximum outer barycenter iterations")->capture_default_str()->check(CLI::PositiveNumber);
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Seed of the MT19937-64 generator")->capture_default_str();
  };
  auto add_diagrams = [&](CLI::App* sub) {
    sub->add_option("diagrams", o.inputs, "Diagram CSV files")->required();
  };
  auto add_out_dir = [&](CLI::App* sub) {
    sub->add_option("--out-dir", o.out_dir, "Output directory")->capture_default_str();
  };
  auto connectivity = CLI::IsMember({"full", "axis"});

  auto* extract = app.add_subcommand("extract", "Maximum/saddle persistence pairs of a grid file");
  extract->add_option("grid", o.inputs, "Grid file")->required()->expected(1);
  extract->add_option("-o,--out", o.out, "Output diagram CSV")->required();
  extract->add_option("--connectivity", o.connectivity, "Neighbourhood: full or axis")
      ->capture_default_str()->check(connectivity);
  extract->add_option("--top-k", o.top_k, "Keep the k most persistent pairs")->check(CLI::PositiveNumber);
  extract->add_option("--epsilon", o.epsilon, "Drop pairs with persistence <= epsilon")
      ->capture_default_str()->check(CLI::NonNegativeNumber);
  extract->callback([&] { action = cmd_extract; });

  auto* dist = app.add_subcommand("dist", "Pairwise W_q distance matrix");
  add_diagrams(dist);
  add_q(dist);
  dist->add_option("-o,--out", o.out, "Output matrix CSV")->required();
  dist->add_flag("--svg", o.svg, "Also write a heat map next to the CSV");
  dist->callback([&] { action = cmd_dist; });

  auto* bary = app.add_subcommand("bary", "W_q barycenter of diagrams");
  add_diagrams(bary);
  add_q(bary);
  add_T(bary);
  add_unsafe(bary);
  bary->add_option("--epsilon", o.epsilon, "Drop output pairs with persistence <= epsilon")
      ->capture_default_str()->check(CLI::NonNegativeNumber);
  bary->add_option("--weights", o.weights, "Barycentric weights w1,...,wm")->delimiter(',');
  bary->add_option("-o,--out", o.out, "Output diagram CSV")->required();
  bary->callback([&] { action = cmd_bary; });

  auto* cluster = app.add_subcommand("cluster", "k-means clustering under W_q");
  add_diagrams(cluster);
  add_q(cluster);
  add_T(cluster);
  add_seed(cluster);
  add_unsafe(cluster);
  add_out_dir(cluster);
  cluster->add_option("--k", o.k, "Number of clusters")->capture_default_str();
  cluster->add_option("--truth", o.truth, "Ground-truth labels for the adjusted Rand index");
  cluster->callback([&] { action = cmd_cluster; });

  auto* enc = app.add_subcommand("encode", "Dictionary encoding with m atoms");
  add_diagrams(enc);
  add_q(enc);
  add_T(enc);
  add_seed(enc);
  add_out_dir(enc);
  enc->add_option("--m", o.m, "Number of atoms")->capture_default_str();
  enc->add_option("--epochs", o.epochs, "Maximum optimisation epochs")->capture_default_str();
  enc->callback([&] { action = cmd_encode; });

  auto* layout = app.add_subcommand("layout", "Planar layout of a 3-atom encoding");
  layout->add_option("bundle", o.inputs, "Encoding bundle JSON")->required()->expected(1);
  layout->add_option("--labels", o.labels, "Class label per input (one integer per line)");
  add_out_dir(layout);
  layout->callback([&] { action = cmd_layout; });

  auto* plot = app.add_subcommand("plot", "SVG plot of one or more diagrams");
  add_diagrams(plot);
  plot->add_option("-o,--out", o.out, "Output SVG")->required();
  plot->callback([&] { action = cmd_plot; });

  auto* synth = app.add_subcommand("synth", "Seeded synthetic outlier ensemble");
  synth->add_option("--spec", o.spec, "Ensemble spec JSON (default: built-in)");
  add_seed(synth);
  add_out_dir(synth);
  synth->add_option("--connectivity", o.connectivity, "Neighbourhood for the extracted diagrams")
      ->capture_default_str()->check(connectivity);
  synth->add_option("--epsilon", o.epsilon, "Drop extracted pairs with persistence <= epsilon")
      ->capture_default_str()->check(CLI::NonNegativeNumber);
  synth->callback([&] { action = cmd_synth; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kContract;
  }

  try {
    action(o);
    return kOk;
  } catch (const pdrb::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kContract;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  }
}
