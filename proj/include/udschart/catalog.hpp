#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "udschart/benefits.hpp"
#include "udschart/combine.hpp"
#include "udschart/placement.hpp"

namespace uds {

/// An assertion about where a scheme should land on the chart. Segment
/// mismatches are errors; coordinate mismatches (when x/y are asserted)
/// are warnings. An errata note records a known, unresolved disagreement
/// between a published figure position and the derivable one.
struct ExpectedPlacement {
  std::string scheme_id;
  VerticalSegment vseg = VerticalSegment::V1;
  HorizontalSegment hseg = HorizontalSegment::OnAxis;
  std::optional<double> x;
  std::optional<double> y;
  std::string errata;

  bool operator==(const ExpectedPlacement&) const = default;
};

/// A parsed scheme catalog. Entries are kept sorted by id so that
/// parse(serialize(c)) == c holds structurally.
struct Catalog {
  std::string source;
  std::vector<SchemeProfile> schemes;
  std::vector<CombinedScheme> combined;
  std::vector<ExpectedPlacement> expectations;

  const SchemeProfile* find_scheme(std::string_view id) const;
  const CombinedScheme* find_combined(std::string_view id) const;

  /// Resolves the combined entry's parts against this catalog and
  /// applies its overrides. Throws std::invalid_argument on dangling
  /// part ids.
  SchemeProfile materialize(const CombinedScheme& entry) const;

  /// Marker-rule chart point of a combined entry: the coordinate-wise
  /// max over its parts' placements. Throws like materialize.
  std::pair<double, double> marker_point(const CombinedScheme& entry) const;

  /// Looks up a base scheme or materializes a combined entry.
  std::optional<SchemeProfile> resolve(std::string_view id) const;

  /// Sorts schemes, combined entries and expectations by id.
  void normalize();

  bool operator==(const Catalog&) const;
};

class CatalogParseError : public std::runtime_error {
 public:
  // line 0 means the failure has no meaningful position (e.g. unreadable file).
  CatalogParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_ = 0;
};

/// Parses the line-oriented catalog format. Parsing is all-or-nothing;
/// any grammar or consistency violation throws CatalogParseError with
/// the offending line number.
Catalog parse_catalog(std::string_view text, std::string_view source_name = "");

/// Canonical form: schemes, combined entries and expectations sorted by
/// id, benefits emitted in U1..M4 order, Absent ratings omitted.
std::string serialize_catalog(const Catalog& catalog);

/// The embedded reference catalog: the full published benefit matrix
/// for 18 base schemes, 13 password combinations, expected segments for
/// every base scheme, exact coordinates where the published figure and
/// the derivable placement agree, and errata notes where they do not.
const Catalog& reference_catalog();

std::string_view reference_catalog_text();

}  // namespace uds
