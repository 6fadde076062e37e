#pragma once

#include <array>
#include <string>

#include "udschart/catalog.hpp"

namespace uds {

struct ChartConfig {
  double width = 640.0;
  double height = 640.0;
  double margin = 60.0;
  double axis_max = 19.0;
  std::array<double, 3> band_radii{6.0, 12.0, 18.0};
  // Inner (darkest) to outer: schemes near the origin fall to the most
  // scalable attacks.
  std::array<std::string, 3> band_fills{"#d9d9d9", "#e8e8e8", "#f5f5f5"};
  std::array<double, 3> gridlines{6.0, 12.0, 18.0};
  double grid_opacity = 0.4;
  double marker_radius = 3.0;
  double label_font_size = 10.0;
  bool segment_captions = true;
  bool ascii_labels = false;
};

/// Renders the exposure-vs-mimicry chart as SVG 1.1. Paint order: the
/// three quarter-disc bands (outermost first), dashed gridlines, axes
/// with labels, segment captions, then one circular marker per distinct
/// base-scheme coordinate and one square marker per distinct combined
/// coordinate (marker rule), each labeled with the comma-joined names
/// of the schemes at that point. Output is byte-deterministic.
std::string render_svg(const Catalog& catalog, const ChartConfig& config = {});

}  // namespace uds
