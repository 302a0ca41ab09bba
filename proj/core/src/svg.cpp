#include "pdrb/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>

#include "pdrb/io.hpp"

namespace pdrb {

namespace {

constexpr double kSize = 480.0;
constexpr double kMargin = 60.0;

std::string num(double v) { return format_number(std::round(v * 100.0) / 100.0); }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string header(double width, double height) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n" +
         "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

}  // namespace

std::string palette_color(std::size_t i) {
  static constexpr std::array<const char*, 8> colors{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                     "#9467bd", "#8c564b", "#e377c2", "#17becf"};
  return colors[i % colors.size()];
}

std::string svg_diagram_plot(std::span<const PersistenceDiagram> diagrams, std::span<const std::string> names) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& d : diagrams)
    for (const auto& p : d.points()) {
      lo = std::min(lo, p.birth);
      hi = std::max(hi, p.death);
    }
  if (!(lo < hi)) {
    lo = std::isfinite(lo) ? lo - 0.5 : 0.0;
    hi = lo + 1.0;
  }
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;
  const double plot = kSize - 2.0 * kMargin;
  auto sx = [&](double v) { return kMargin + (v - lo) / (hi - lo) * plot; };
  auto sy = [&](double v) { return kSize - kMargin - (v - lo) / (hi - lo) * plot; };

  std::string out = header(kSize + 140.0, kSize);
  out += "<rect x=\"" + num(kMargin) + "\" y=\"" + num(kMargin) + "\" width=\"" + num(plot) + "\" height=\"" +
         num(plot) + "\" fill=\"none\" stroke=\"black\"/>\n";
  out += "<line class=\"diagonal\" x1=\"" + num(sx(lo)) + "\" y1=\"" + num(sy(lo)) + "\" x2=\"" + num(sx(hi)) +
         "\" y2=\"" + num(sy(hi)) + "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
  out += "<text x=\"" + num(kSize / 2.0) + "\" y=\"" + num(kSize - 20.0) + "\" text-anchor=\"middle\">birth</text>\n";
  out += "<text x=\"20\" y=\"" + num(kSize / 2.0) + "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
         num(kSize / 2.0) + ")\">death</text>\n";
  out += "<text x=\"" + num(kMargin) + "\" y=\"" + num(kSize - kMargin + 16.0) + "\">" + num(lo) + "</text>\n";
  out += "<text x=\"" + num(kSize - kMargin) + "\" y=\"" + num(kSize - kMargin + 16.0) +
         "\" text-anchor=\"end\">" + num(hi) + "</text>\n";

  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    const auto color = palette_color(i);
    for (const auto& p : diagrams[i].points())
      out += "<circle class=\"point\" cx=\"" + num(sx(p.birth)) + "\" cy=\"" + num(sy(p.death)) +
             "\" r=\"4\" fill=\"" + color + "\" fill-opacity=\"0.8\"/>\n";
    const double ly = kMargin + 18.0 * static_cast<double>(i);
    const std::string name = i < names.size() ? names[i] : "diagram " + std::to_string(i);
    out += "<g class=\"legend\"><rect x=\"" + num(kSize + 4.0) + "\" y=\"" + num(ly - 9.0) +
           "\" width=\"10\" height=\"10\" fill=\"" + color + "\"/><text x=\"" + num(kSize + 20.0) + "\" y=\"" +
           num(ly) + "\">" + escape(name) + "</text></g>\n";
  }
  return out + "</svg>\n";
}

std::string svg_heatmap(const DistanceMatrix& matrix, std::span<const std::string> names) {
  const double n = static_cast<double>(std::max<std::size_t>(matrix.size, 1));
  const double cell = (kSize - 2.0 * kMargin) / n;
  const double top = matrix.entries.empty() ? 0.0 : *std::max_element(matrix.entries.begin(), matrix.entries.end());

  std::string out = header(kSize, kSize);
  for (std::size_t i = 0; i < matrix.size; ++i) {
    const std::string name = i < names.size() ? names[i] : std::to_string(i);
    const double c = kMargin + (static_cast<double>(i) + 0.5) * cell;
    out += "<text x=\"" + num(kMargin - 4.0) + "\" y=\"" + num(c + 4.0) + "\" text-anchor=\"end\">" + escape(name) +
           "</text>\n";
    out += "<text x=\"" + num(c) + "\" y=\"" + num(kMargin - 6.0) + "\" text-anchor=\"middle\">" + escape(name) +
           "</text>\n";
    for (std::size_t j = 0; j < matrix.size; ++j) {
      const double t = top > 0.0 ? matrix(i, j) / top : 0.0;
      const auto level = static_cast<int>(std::lround(255.0 * (1.0 - t)));
      const std::string grey = std::to_string(level);
      out += "<rect x=\"" + num(kMargin + static_cast<double>(j) * cell) + "\" y=\"" +
             num(kMargin + static_cast<double>(i) * cell) + "\" width=\"" + num(cell) + "\" height=\"" + num(cell) +
             "\" fill=\"rgb(" + grey + "," + grey + "," + grey + ")\"><title>" + format_number(matrix(i, j)) +
             "</title></rect>\n";
    }
  }
  return out + "</svg>\n";
}

std::string svg_layout(const PlanarLayout& layout, std::span<const std::string> labels) {
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  for (const auto& v : layout.vertices) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  const double extent = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double scale = (kSize - 2.0 * kMargin) / extent;
  const double radius = 4.0 / scale;
  auto raw = [](double v) { return format_number(v); };

  std::map<std::string, std::size_t> colors;
  for (const auto& l : labels) colors.emplace(l, colors.size());

  std::string out = header(kSize, kSize);
  out += "<g transform=\"translate(" + num(kMargin - xmin * scale) + " " + num(kSize - kMargin + ymin * scale) +
         ") scale(" + format_number(scale) + " " + format_number(-scale) + ")\">\n";
  out += "<polygon class=\"atoms\" points=\"";
  for (std::size_t j = 0; j < 3; ++j)
    out += (j ? " " : "") + raw(layout.vertices[j].x) + "," + raw(layout.vertices[j].y);
  out += "\" fill=\"none\" stroke=\"#888\" stroke-width=\"" + raw(1.0 / scale) + "\"/>\n";
  for (std::size_t j = 0; j < 3; ++j)
    out += "<circle class=\"atom\" cx=\"" + raw(layout.vertices[j].x) + "\" cy=\"" + raw(layout.vertices[j].y) +
           "\" r=\"" + raw(1.5 * radius) + "\" fill=\"black\"/>\n";
  for (std::size_t i = 0; i < layout.points.size(); ++i) {
    const std::string label = i < labels.size() ? labels[i] : "";
    const auto color = palette_color(colors.count(label) ? colors[label] : 0);
    out += "<circle class=\"input\" cx=\"" + raw(layout.points[i].x) + "\" cy=\"" + raw(layout.points[i].y) +
           "\" r=\"" + raw(radius) + "\" fill=\"" + color + "\"><title>" + escape(label) + "</title></circle>\n";
  }
  out += "</g>\n";
  for (const auto& [label, index] : colors) {
    const double ly = 20.0 + 16.0 * static_cast<double>(index);
    out += "<g class=\"legend\"><rect x=\"10\" y=\"" + num(ly - 9.0) + "\" width=\"10\" height=\"10\" fill=\"" +
           palette_color(index) + "\"/><text x=\"26\" y=\"" + num(ly) + "\">" + escape(label) + "</text></g>\n";
  }
  return out + "</svg>\n";
}

}  // namespace pdrb
