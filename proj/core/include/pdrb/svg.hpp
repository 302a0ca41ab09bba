#pragma once

#include <span>
#include <string>

#include "pdrb/diagram.hpp"
#include "pdrb/dictionary.hpp"
#include "pdrb/metric.hpp"

namespace pdrb {

/// Colour of series i; the palette cycles after eight entries.
[[nodiscard]] std::string palette_color(std::size_t i);

/// Birth/death scatter with the diagonal, one colour per diagram and a legend
/// in input order.
[[nodiscard]] std::string svg_diagram_plot(std::span<const PersistenceDiagram> diagrams,
                                           std::span<const std::string> names);

/// Grey-scale heat map, rows and columns in input order.
[[nodiscard]] std::string svg_heatmap(const DistanceMatrix& matrix, std::span<const std::string> names);

/// Triangle of atom vertices and one marker per input, coloured by label.
/// Marker and vertex coordinates are emitted in layout units inside a single
/// transformed group.
[[nodiscard]] std::string svg_layout(const PlanarLayout& layout, std::span<const std::string> labels);

}  // namespace pdrb
