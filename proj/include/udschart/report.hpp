#pragma once

#include <string>

#include "udschart/catalog.hpp"

namespace uds {

enum class TableFormat : std::uint8_t { Text, Csv, Markdown };

/// Rendering policy for benefit tables. Text and markdown output use
/// the framework's filled/empty circle symbols unless ascii_symbols is
/// set; CSV always spells ratings out as words.
struct TableSpec {
  TableFormat format = TableFormat::Text;
  bool ascii_symbols = false;
};

/// One row per scheme (base rows ordered by category then id, then
/// combined rows by id) with all 31 benefit columns in U1..M4 order.
std::string render_table(const Catalog& catalog, const TableSpec& spec = {});

/// Placement listing: id, segments, sublevels, coordinates, expectation
/// status (ok / errata / mismatch / "-") and the rule that produced the
/// coordinate. Combined entries get one row for their combined benefit
/// vector and one for the coordinate-wise marker rule.
std::string render_placements(const Catalog& catalog);

/// Lists only the benefits whose ratings differ, one per line:
/// "S5: absent -> full" (rendered with a Unicode arrow).
std::string render_diff(const SchemeProfile& a, const SchemeProfile& b);

}  // namespace uds
