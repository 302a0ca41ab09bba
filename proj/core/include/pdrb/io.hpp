#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pdrb/diagram.hpp"
#include "pdrb/metric.hpp"
#include "pdrb/persistence.hpp"
#include "pdrb/synthetic.hpp"

namespace pdrb {

/// Unreadable/unwritable files and malformed input files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal form that reads back to the same double.
[[nodiscard]] std::string format_number(double value);

[[nodiscard]] std::string read_text_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Diagram CSV: one `birth,death` pair per line, optional `birth,death`
/// header, blank lines ignored. Errors name the source and line number.
[[nodiscard]] PersistenceDiagram parse_diagram_csv(std::string_view text, const std::string& source = "<input>");
[[nodiscard]] PersistenceDiagram read_diagram_csv(const std::filesystem::path& path);
/// Always emits the header line.
[[nodiscard]] std::string diagram_csv(const PersistenceDiagram& diagram);

/// Grid file: first line `dims: d1 [d2 [d3]]`, then whitespace-separated
/// values in row-major order.
[[nodiscard]] ScalarGrid parse_grid(std::string_view text, const std::string& source = "<input>");
[[nodiscard]] ScalarGrid read_grid(const std::filesystem::path& path);
[[nodiscard]] std::string grid_text(const ScalarGrid& grid);

/// N lines of N comma-separated values.
[[nodiscard]] std::string distance_matrix_csv(const DistanceMatrix& matrix);

/// One non-negative integer per line.
[[nodiscard]] std::vector<std::size_t> parse_labels(std::string_view text, const std::string& source = "<input>");
[[nodiscard]] std::string labels_csv(const std::vector<std::size_t>& labels);

/// JSON array of numbers.
[[nodiscard]] std::string number_array_json(const std::vector<double>& values);

/// {"dims": [...], "clusters": [{"count", "bumps", "amplitude": [lo, hi]}],
///  "outliers": [{"cluster", "member"}], "margin", "sigma": [lo, hi], "jitter"}
/// Missing keys keep the values of default_outlier_spec().
[[nodiscard]] EnsembleSpec parse_ensemble_spec(std::string_view json, const std::string& source = "<input>");
[[nodiscard]] std::string ensemble_spec_json(const EnsembleSpec& spec);

/// Encoding bundle: atom diagram files (relative to the bundle), one
/// coefficient vector and name per input, and the energy trace.
struct EncodingBundle {
  double q = 2.0;
  std::vector<std::string> atom_files;
  std::vector<std::string> inputs;
  std::vector<std::vector<double>> coefficients;
  std::vector<double> energy_trace;
};

[[nodiscard]] std::string bundle_json(const EncodingBundle& bundle);
[[nodiscard]] EncodingBundle parse_bundle(std::string_view json, const std::string& source = "<input>");

/// Reproducibility record written next to every command output.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::map<std::string, double> results;
};

[[nodiscard]] std::string manifest_json(const RunManifest& manifest);

/// Library version string.
[[nodiscard]] std::string_view version();

}  // namespace pdrb
