#pragma once

#include <string_view>
#include <utility>

#include "udschart/benefits.hpp"

namespace uds {

/// Exposure-resistance segments on the vertical axis, origin upward.
enum class VerticalSegment : std::uint8_t { V1 = 0, V2 = 1, V3 = 2 };

/// Mimicry-resistance segments on the horizontal axis. Schemes with no
/// mimicry resistance sit on the vertical axis itself.
enum class HorizontalSegment : std::uint8_t { OnAxis = 0, H1, H2, H3 };

int vindex(VerticalSegment s);       // 0..2
int hindex(HorizontalSegment s);     // 0..2; rejects OnAxis
std::string_view segment_code(VerticalSegment s);    // "V1"
std::string_view segment_code(HorizontalSegment s);  // "none", "H1", ...
std::string_view segment_name(VerticalSegment s);
std::string_view segment_name(HorizontalSegment s);

/// A scheme's position on the chart: segment and sublevel on each axis
/// plus the resulting coordinates in chart units.
struct Placement {
  VerticalSegment vseg = VerticalSegment::V1;
  int vsub = 1;  // 1..sublevel_count(vseg)
  HorizontalSegment hseg = HorizontalSegment::OnAxis;
  int hsub = 0;  // 0 when OnAxis, else 1 or 2
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Placement&) const = default;
};

/// Number of sublevels in a segment governed by n benefits:
/// sum of i for i in 2..n+1, i.e. (n+1)(n+2)/2 - 1.
/// Rejects n_benefits < 1.
int sublevel_count(int n_benefits);

int sublevel_count(VerticalSegment s);

/// Sublevel for a scheme whose governing set of n benefits has `full`
/// fully-offered and `partial` partially-offered members. Any fully
/// offered benefit outranks any number of partials. The all-full case
/// (full == n, partial == 0) only occurs in a top segment with nothing
/// above it to spill into; it is clamped to sublevel_count(n).
/// Rejects negative counts and full + partial > n_benefits.
int sublevel_from_counts(int n_benefits, int full, int partial);

/// V1 unless both S3 and S4 are Full; V3 if additionally all of
/// S1, S5, S6, S7 and S9 are Full; V2 otherwise. Gates require Full;
/// Partial never qualifies.
VerticalSegment vertical_segment(const BenefitVector& v);

/// Counts Full/Partial over the segment's governing multiset
/// (V1: {S3,S4}; V2: {S1,S5,S6m,S7}; V3: {S2,S8}) and applies
/// sublevel_from_counts. Precondition: vseg == vertical_segment(v).
int vertical_sublevel(const BenefitVector& v, VerticalSegment vseg);

/// Highest-priority mimicry benefit at Partial or better decides the
/// segment (M4 -> H3, M3 -> H2, M2 -> H1); the sublevel is 1 for
/// Partial, 2 for Full. All of M2-M4 Absent puts the scheme on the
/// vertical axis with sublevel 0.
std::pair<HorizontalSegment, int> horizontal_placement(const BenefitVector& v);

/// Chart coordinates for a segment/sublevel pair on each axis:
/// y = 6*vindex + 6/(count+1)*vsub, x = 0 on axis else 6*hindex + 2*hsub.
/// Sublevels are never placed on the 6/12/18 segment boundaries.
/// Rejects out-of-range sublevels.
std::pair<double, double> coordinates(VerticalSegment vseg, int vsub,
                                      HorizontalSegment hseg, int hsub);

Placement place(const SchemeProfile& profile);

/// Multi-factor marker rule: the combined marker takes the greater of
/// both x-values and both y-values.
std::pair<double, double> combine_markers(const Placement& a, const Placement& b);

}  // namespace uds
