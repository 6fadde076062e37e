#include "udschart/chart.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

#include "udschart/placement.hpp"

namespace uds {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  std::string s = buf;
  while (s.find('.') != std::string::npos && (s.back() == '0' || s.back() == '.')) {
    bool dot = s.back() == '.';
    s.pop_back();
    if (dot) break;
  }
  return s;
}

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char c : text) {
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

std::string ascii_only(const std::string& text) {
  std::string out;
  for (char c : text)
    if (static_cast<unsigned char>(c) < 0x80) out += c;
  return out;
}

// Coordinates keyed exactly; chart values are clean tenths.
using Point = std::pair<double, double>;

struct MarkerGroup {
  Point point;
  std::string label;
};

std::vector<MarkerGroup> coalesce(const std::vector<std::pair<Point, std::string>>& items) {
  std::vector<MarkerGroup> groups;
  for (const auto& item : items) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const MarkerGroup& g) { return g.point == item.first; });
    if (it == groups.end()) {
      groups.push_back({item.first, item.second});
    } else {
      it->label += ", " + item.second;
    }
  }
  return groups;
}

}  // namespace

std::string render_svg(const Catalog& catalog, const ChartConfig& config) {
  const double plot = std::min(config.width, config.height) - 2.0 * config.margin;
  const double scale = plot / config.axis_max;
  auto px = [&](double x) { return config.margin + x * scale; };
  auto py = [&](double y) { return config.height - config.margin - y * scale; };
  const double max_band = *std::max_element(config.band_radii.begin(), config.band_radii.end());

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << num(config.width) << "\" height=\"" << num(config.height) << "\" viewBox=\"0 0 "
      << num(config.width) << " " << num(config.height) << "\">\n";
  svg << "  <rect x=\"0\" y=\"0\" width=\"" << num(config.width) << "\" height=\""
      << num(config.height) << "\" fill=\"#ffffff\"/>\n";

  // Quarter-disc bands, outermost (lightest) first so the darkest ends
  // up nearest the origin.
  for (int i = 2; i >= 0; --i) {
    const double r = config.band_radii[static_cast<std::size_t>(i)] * scale;
    svg << "  <path class=\"band\" d=\"M " << num(px(0)) << " " << num(py(0) - r) << " A "
        << num(r) << " " << num(r) << " 0 0 1 " << num(px(0) + r) << " " << num(py(0))
        << " L " << num(px(0)) << " " << num(py(0)) << " Z\" fill=\""
        << config.band_fills[static_cast<std::size_t>(i)] << "\"/>\n";
  }

  for (double g : config.gridlines) {
    svg << "  <line class=\"gridline\" x1=\"" << num(px(g)) << "\" y1=\"" << num(py(0))
        << "\" x2=\"" << num(px(g)) << "\" y2=\"" << num(py(max_band))
        << "\" stroke=\"#555555\" stroke-dasharray=\"4 3\" opacity=\""
        << num(config.grid_opacity) << "\"/>\n";
    svg << "  <line class=\"gridline\" x1=\"" << num(px(0)) << "\" y1=\"" << num(py(g))
        << "\" x2=\"" << num(px(max_band)) << "\" y2=\"" << num(py(g))
        << "\" stroke=\"#555555\" stroke-dasharray=\"4 3\" opacity=\""
        << num(config.grid_opacity) << "\"/>\n";
  }

  svg << "  <line class=\"axis\" x1=\"" << num(px(0)) << "\" y1=\"" << num(py(0))
      << "\" x2=\"" << num(px(config.axis_max)) << "\" y2=\"" << num(py(0))
      << "\" stroke=\"#000000\"/>\n";
  svg << "  <line class=\"axis\" x1=\"" << num(px(0)) << "\" y1=\"" << num(py(0))
      << "\" x2=\"" << num(px(0)) << "\" y2=\"" << num(py(config.axis_max))
      << "\" stroke=\"#000000\"/>\n";
  svg << "  <text class=\"axis-label\" x=\"" << num(px(config.axis_max))
      << "\" y=\"" << num(py(0) + 28) << "\" text-anchor=\"end\" font-size=\""
      << num(config.label_font_size + 2) << "\">Mimicry Resistance</text>\n";
  svg << "  <text class=\"axis-label\" x=\"" << num(px(0) - 32) << "\" y=\""
      << num(py(config.axis_max)) << "\" text-anchor=\"start\" font-size=\""
      << num(config.label_font_size + 2) << "\" transform=\"rotate(-90 " << num(px(0) - 32)
      << " " << num(py(config.axis_max)) << ")\">Exposure Resistance</text>\n";

  if (config.segment_captions) {
    const std::array<VerticalSegment, 3> vsegs{VerticalSegment::V1, VerticalSegment::V2,
                                               VerticalSegment::V3};
    for (const auto seg : vsegs) {
      const double mid = 6.0 * vindex(seg) + 3.0;
      std::string caption = std::string(segment_code(seg)) + ": " +
                            std::string(segment_name(seg));
      svg << "  <text class=\"caption\" x=\"" << num(px(0) - 10) << "\" y=\""
          << num(py(mid)) << "\" text-anchor=\"middle\" font-size=\""
          << num(config.label_font_size - 2) << "\" transform=\"rotate(-90 "
          << num(px(0) - 10) << " " << num(py(mid)) << ")\">" << escape_xml(caption)
          << "</text>\n";
    }
    const std::array<HorizontalSegment, 3> hsegs{HorizontalSegment::H1, HorizontalSegment::H2,
                                                 HorizontalSegment::H3};
    for (const auto seg : hsegs) {
      const double mid = 6.0 * hindex(seg) + 3.0;
      std::string caption = std::string(segment_code(seg)) + ": " +
                            std::string(segment_name(seg));
      svg << "  <text class=\"caption\" x=\"" << num(px(mid)) << "\" y=\""
          << num(py(0) + 14) << "\" text-anchor=\"middle\" font-size=\""
          << num(config.label_font_size - 2) << "\">" << escape_xml(caption) << "</text>\n";
    }
  }

  // Base schemes, ordered by category then id so labels coalesce
  // deterministically.
  std::vector<const SchemeProfile*> base;
  for (const auto& s : catalog.schemes) base.push_back(&s);
  std::sort(base.begin(), base.end(), [](const auto* a, const auto* b) {
    if (a->category != b->category) return a->category < b->category;
    return a->id < b->id;
  });
  std::vector<std::pair<Point, std::string>> base_points;
  for (const auto* s : base) {
    Placement p = place(*s);
    base_points.push_back({{p.x, p.y}, s->name});
  }

  std::vector<std::pair<Point, std::string>> combined_points;
  for (const auto& c : catalog.combined) {
    SchemeProfile profile = catalog.materialize(c);
    combined_points.push_back({catalog.marker_point(c), profile.name});
  }

  auto emit_label = [&](double cx, double cy, double dy, const std::string& text) {
    std::string label = config.ascii_labels ? ascii_only(text) : text;
    svg << "  <text class=\"marker-label\" x=\"" << num(cx + config.marker_radius + 3)
        << "\" y=\"" << num(cy + dy) << "\" font-size=\"" << num(config.label_font_size)
        << "\">" << escape_xml(label) << "</text>\n";
  };

  for (const auto& g : coalesce(base_points)) {
    const double cx = px(g.point.first);
    const double cy = py(g.point.second);
    svg << "  <circle class=\"marker\" cx=\"" << num(cx) << "\" cy=\"" << num(cy)
        << "\" r=\"" << num(config.marker_radius) << "\" fill=\"#000000\"/>\n";
    emit_label(cx, cy, 3.0, g.label);
  }
  // Combined labels sit one line lower so they stay readable when a
  // combined marker lands on a base marker.
  for (const auto& g : coalesce(combined_points)) {
    const double cx = px(g.point.first);
    const double cy = py(g.point.second);
    const double r = config.marker_radius;
    svg << "  <rect class=\"marker-combined\" x=\"" << num(cx - r) << "\" y=\""
        << num(cy - r) << "\" width=\"" << num(2 * r) << "\" height=\"" << num(2 * r)
        << "\" fill=\"#000000\"/>\n";
    emit_label(cx, cy, 3.0 + config.label_font_size + 2, g.label);
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace uds
