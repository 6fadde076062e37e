#include "udschart/placement.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace uds {

namespace {

Rating governed(const BenefitVector& v, BenefitId b) { return v.rating(b); }

void count_ratings(const BenefitVector& v, VerticalSegment vseg, int& full, int& partial) {
  full = 0;
  partial = 0;
  auto tally = [&](Rating r) {
    if (r == Rating::Full) ++full;
    else if (r == Rating::Partial) ++partial;
  };
  switch (vseg) {
    case VerticalSegment::V1:
      for (BenefitId b : gates::v1_governing) tally(governed(v, b));
      break;
    case VerticalSegment::V2:
      tally(governed(v, BenefitId::S1));
      tally(governed(v, BenefitId::S5));
      tally(merged_s6(v));
      tally(governed(v, BenefitId::S7));
      break;
    case VerticalSegment::V3:
      for (BenefitId b : gates::v3_governing) tally(governed(v, b));
      break;
  }
}

int governing_size(VerticalSegment s) { return s == VerticalSegment::V2 ? 4 : 2; }

}  // namespace

int vindex(VerticalSegment s) { return static_cast<int>(s); }

int hindex(HorizontalSegment s) {
  if (s == HorizontalSegment::OnAxis)
    throw std::invalid_argument("hindex: OnAxis has no segment index");
  return static_cast<int>(s) - 1;
}

std::string_view segment_code(VerticalSegment s) {
  switch (s) {
    case VerticalSegment::V1: return "V1";
    case VerticalSegment::V2: return "V2";
    case VerticalSegment::V3: return "V3";
  }
  return "V1";
}

std::string_view segment_code(HorizontalSegment s) {
  switch (s) {
    case HorizontalSegment::OnAxis: return "none";
    case HorizontalSegment::H1: return "H1";
    case HorizontalSegment::H2: return "H2";
    case HorizontalSegment::H3: return "H3";
  }
  return "none";
}

std::string_view segment_name(VerticalSegment s) {
  switch (s) {
    case VerticalSegment::V1: return "Negligible-resistance/Guessable";
    case VerticalSegment::V2: return "Guess-resistant/Leakable";
    case VerticalSegment::V3: return "Leak-resistant";
  }
  return "";
}

std::string_view segment_name(HorizontalSegment s) {
  switch (s) {
    case HorizontalSegment::OnAxis: return "";
    case HorizontalSegment::H1: return "Infrequent intercept/capture resistant";
    case HorizontalSegment::H2: return "Intercept/capture and reuse resistant";
    case HorizontalSegment::H3: return "Spoof-resistant";
  }
  return "";
}

int sublevel_count(int n_benefits) {
  if (n_benefits < 1)
    throw std::invalid_argument("sublevel_count: need at least one governing benefit");
  return (n_benefits + 1) * (n_benefits + 2) / 2 - 1;
}

int sublevel_count(VerticalSegment s) { return sublevel_count(governing_size(s)); }

int sublevel_from_counts(int n_benefits, int full, int partial) {
  if (n_benefits < 1)
    throw std::invalid_argument("sublevel_from_counts: need at least one governing benefit");
  if (full < 0 || partial < 0 || full + partial > n_benefits)
    throw std::invalid_argument("sublevel_from_counts: inconsistent counts (" +
                                std::to_string(full) + " full + " + std::to_string(partial) +
                                " partial > " + std::to_string(n_benefits) + ")");
  // Blocks ordered by full count; block f holds the n-f+1 partial counts.
  int level = partial + 1;
  for (int f = 0; f < full; ++f) level += n_benefits + 1 - f;
  return std::min(level, sublevel_count(n_benefits));
}

VerticalSegment vertical_segment(const BenefitVector& v) {
  auto is_full = [&](BenefitId b) { return v.rating(b) == Rating::Full; };
  if (!std::all_of(gates::v2_gate.begin(), gates::v2_gate.end(), is_full))
    return VerticalSegment::V1;
  if (std::all_of(gates::v3_gate.begin(), gates::v3_gate.end(), is_full))
    return VerticalSegment::V3;
  return VerticalSegment::V2;
}

int vertical_sublevel(const BenefitVector& v, VerticalSegment vseg) {
  int full = 0;
  int partial = 0;
  count_ratings(v, vseg, full, partial);
  return sublevel_from_counts(governing_size(vseg), full, partial);
}

std::pair<HorizontalSegment, int> horizontal_placement(const BenefitVector& v) {
  const std::array<std::pair<HorizontalSegment, BenefitId>, 3> priority{{
      {HorizontalSegment::H3, BenefitId::M4},
      {HorizontalSegment::H2, BenefitId::M3},
      {HorizontalSegment::H1, BenefitId::M2},
  }};
  for (const auto& [seg, benefit] : priority) {
    Rating r = v.rating(benefit);
    if (r != Rating::Absent) return {seg, r == Rating::Full ? 2 : 1};
  }
  return {HorizontalSegment::OnAxis, 0};
}

std::pair<double, double> coordinates(VerticalSegment vseg, int vsub,
                                      HorizontalSegment hseg, int hsub) {
  const int vcount = sublevel_count(vseg);
  if (vsub < 1 || vsub > vcount)
    throw std::invalid_argument("coordinates: vertical sublevel " + std::to_string(vsub) +
                                " out of range for " + std::string(segment_code(vseg)));
  // Tenths keep the chart grid exact: sublevel spacings are 1.0 (V1/V3),
  // 0.4 (V2) and 2.0 (H1-H3), all whole numbers of tenths.
  const int y_tenths = 60 * vindex(vseg) + (60 / (vcount + 1)) * vsub;

  int x_tenths = 0;
  if (hseg == HorizontalSegment::OnAxis) {
    if (hsub != 0)
      throw std::invalid_argument("coordinates: on-axis placement has sublevel 0");
  } else {
    if (hsub < 1 || hsub > 2)
      throw std::invalid_argument("coordinates: horizontal sublevel " + std::to_string(hsub) +
                                  " out of range");
    x_tenths = 60 * hindex(hseg) + 20 * hsub;
  }
  return {x_tenths / 10.0, y_tenths / 10.0};
}

Placement place(const SchemeProfile& profile) {
  Placement p;
  p.vseg = vertical_segment(profile.vector);
  p.vsub = vertical_sublevel(profile.vector, p.vseg);
  std::tie(p.hseg, p.hsub) = horizontal_placement(profile.vector);
  std::tie(p.x, p.y) = coordinates(p.vseg, p.vsub, p.hseg, p.hsub);
  return p;
}

std::pair<double, double> combine_markers(const Placement& a, const Placement& b) {
  return {std::max(a.x, b.x), std::max(a.y, b.y)};
}

}  // namespace uds
