#include "pdrb/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

namespace pdrb {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  throw IoError(source + ":" + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line = 1;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    f(text.substr(0, nl), line++);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(source + ": invalid JSON: " + e.what());
  }
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path.string());
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("error while writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into place at " + path.string());
  }
}

PersistenceDiagram parse_diagram_csv(std::string_view text, const std::string& source) {
  std::vector<DiagramPoint> points;
  bool first = true;
  for_each_line(text, [&](std::string_view raw, std::size_t line) {
    const auto row = trim(raw);
    if (row.empty()) return;
    const bool header_allowed = first;
    first = false;
    if (header_allowed && row == "birth,death") return;
    const auto comma = row.find(',');
    if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos)
      fail(source, line, "expected two comma-separated values");
    DiagramPoint p;
    if (!parse_double(row.substr(0, comma), p.birth) || !parse_double(row.substr(comma + 1), p.death))
      fail(source, line, "malformed number");
    if (!std::isfinite(p.birth) || !std::isfinite(p.death)) fail(source, line, "non-finite value");
    if (p.death < p.birth) fail(source, line, "death is smaller than birth");
    points.push_back(p);
  });
  return PersistenceDiagram(std::move(points));
}

PersistenceDiagram read_diagram_csv(const std::filesystem::path& path) {
  auto d = parse_diagram_csv(read_text_file(path), path.string());
  d.set_label(path.stem().string());
  return d;
}

std::string diagram_csv(const PersistenceDiagram& diagram) {
  std::string out = "birth,death\n";
  for (const auto& p : diagram.points()) out += format_number(p.birth) + "," + format_number(p.death) + "\n";
  return out;
}

ScalarGrid parse_grid(std::string_view text, const std::string& source) {
  std::vector<std::size_t> dims;
  std::vector<double> values;
  bool header = true;
  for_each_line(text, [&](std::string_view raw, std::size_t line) {
    auto row = trim(raw);
    if (header) {
      if (row.substr(0, 5) != "dims:") fail(source, line, "expected a `dims: d1 [d2 [d3]]` header");
      std::istringstream ss{std::string(row.substr(5))};
      std::string token;
      while (ss >> token) {
        std::size_t d = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), d);
        if (ec != std::errc() || ptr != token.data() + token.size() || d == 0)
          fail(source, line, "grid dimensions must be positive integers");
        dims.push_back(d);
      }
      if (dims.empty() || dims.size() > 3) fail(source, line, "a grid has 1, 2 or 3 dimensions");
      header = false;
      return;
    }
    while (!row.empty()) {
      const auto end = row.find_first_of(" \t");
      const auto token = row.substr(0, end);
      double v = 0.0;
      if (!parse_double(token, v)) fail(source, line, "malformed number `" + std::string(token) + "`");
      if (!std::isfinite(v)) fail(source, line, "non-finite value");
      values.push_back(v);
      row = end == std::string_view::npos ? std::string_view{} : trim(row.substr(end));
    }
  });
  if (header) throw IoError(source + ": empty grid file");
  std::size_t expected = 1;
  for (auto d : dims) expected *= d;
  if (values.size() != expected)
    throw IoError(source + ": expected " + std::to_string(expected) + " values, found " +
                  std::to_string(values.size()));
  return ScalarGrid(std::move(dims), std::move(values));
}

ScalarGrid read_grid(const std::filesystem::path& path) { return parse_grid(read_text_file(path), path.string()); }

std::string grid_text(const ScalarGrid& grid) {
  std::string out = "dims:";
  for (auto d : grid.dims()) out += " " + std::to_string(d);
  out += "\n";
  const std::size_t row = grid.dims().back();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out += format_number(grid.values()[i]);
    out += (i + 1) % row == 0 ? "\n" : " ";
  }
  return out;
}

std::string distance_matrix_csv(const DistanceMatrix& matrix) {
  std::string out;
  for (std::size_t i = 0; i < matrix.size; ++i) {
    for (std::size_t j = 0; j < matrix.size; ++j) {
      if (j > 0) out += ",";
      out += format_number(matrix(i, j));
    }
    out += "\n";
  }
  return out;
}

std::vector<std::size_t> parse_labels(std::string_view text, const std::string& source) {
  std::vector<std::size_t> labels;
  for_each_line(text, [&](std::string_view raw, std::size_t line) {
    const auto row = trim(raw);
    if (row.empty()) return;
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(row.data(), row.data() + row.size(), v);
    if (ec != std::errc() || ptr != row.data() + row.size()) fail(source, line, "expected a non-negative integer");
    labels.push_back(v);
  });
  return labels;
}

std::string labels_csv(const std::vector<std::size_t>& labels) {
  std::string out;
  for (auto l : labels) out += std::to_string(l) + "\n";
  return out;
}

std::string number_array_json(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + format_number(values[i]);
  return out + "]\n";
}

EnsembleSpec parse_ensemble_spec(std::string_view text, const std::string& source) {
  const json j = parse_json(text, source);
  EnsembleSpec spec = default_outlier_spec();
  try {
    if (j.contains("dims")) spec.dims = j.at("dims").get<std::vector<std::size_t>>();
    if (j.contains("clusters")) {
      spec.clusters.clear();
      for (const auto& c : j.at("clusters")) {
        ClusterSpec cs;
        cs.count = c.value("count", cs.count);
        cs.bumps = c.value("bumps", cs.bumps);
        if (c.contains("amplitude")) {
          cs.amplitude_min = c.at("amplitude").at(0).get<double>();
          cs.amplitude_max = c.at("amplitude").at(1).get<double>();
        }
        spec.clusters.push_back(cs);
      }
    }
    if (j.contains("outliers")) {
      spec.outliers.clear();
      for (const auto& o : j.at("outliers"))
        spec.outliers.push_back({o.at("cluster").get<std::size_t>(), o.at("member").get<std::size_t>()});
    }
    spec.margin = j.value("margin", spec.margin);
    if (j.contains("sigma")) {
      spec.sigma_min = j.at("sigma").at(0).get<double>();
      spec.sigma_max = j.at("sigma").at(1).get<double>();
    }
    spec.jitter = j.value("jitter", spec.jitter);
  } catch (const json::exception& e) {
    throw IoError(source + ": invalid ensemble spec: " + e.what());
  }
  return spec;
}

std::string ensemble_spec_json(const EnsembleSpec& spec) {
  json j;
  j["dims"] = spec.dims;
  j["clusters"] = json::array();
  for (const auto& c : spec.clusters)
    j["clusters"].push_back({{"count", c.count}, {"bumps", c.bumps}, {"amplitude", {c.amplitude_min, c.amplitude_max}}});
  j["outliers"] = json::array();
  for (const auto& o : spec.outliers) j["outliers"].push_back({{"cluster", o.cluster}, {"member", o.member}});
  j["margin"] = spec.margin;
  j["sigma"] = {spec.sigma_min, spec.sigma_max};
  j["jitter"] = spec.jitter;
  return j.dump(2) + "\n";
}

std::string bundle_json(const EncodingBundle& bundle) {
  json j;
  j["q"] = bundle.q;
  j["atoms"] = bundle.atom_files;
  j["inputs"] = bundle.inputs;
  j["coefficients"] = bundle.coefficients;
  j["energy_trace"] = bundle.energy_trace;
  return j.dump(2) + "\n";
}

EncodingBundle parse_bundle(std::string_view text, const std::string& source) {
  const json j = parse_json(text, source);
  EncodingBundle b;
  try {
    b.q = j.at("q").get<double>();
    b.atom_files = j.at("atoms").get<std::vector<std::string>>();
    b.inputs = j.at("inputs").get<std::vector<std::string>>();
    b.coefficients = j.at("coefficients").get<std::vector<std::vector<double>>>();
    b.energy_trace = j.value("energy_trace", std::vector<double>{});
  } catch (const json::exception& e) {
    throw IoError(source + ": invalid encoding bundle: " + e.what());
  }
  if (b.inputs.size() != b.coefficients.size())
    throw IoError(source + ": one coefficient vector per input is required");
  return b;
}

std::string manifest_json(const RunManifest& manifest) {
  json j;
  j["command"] = manifest.command;
  j["parameters"] = manifest.parameters;
  j["inputs"] = manifest.inputs;
  j["outputs"] = manifest.outputs;
  if (!manifest.results.empty()) j["results"] = manifest.results;
  j["version"] = std::string(version());
  return j.dump(2) + "\n";
}

std::string_view version() { return PDRB_VERSION_STRING; }

}  // namespace pdrb
