#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "udschart/catalog.hpp"

namespace uds {

enum class Severity : std::uint8_t { Error, Warning, Info };

std::string_view to_string(Severity s);

struct LintFinding {
  std::string rule;  // "R1".."R5"
  Severity severity = Severity::Info;
  std::string scheme;
  std::string message;

  bool operator==(const LintFinding&) const = default;
};

/// Lints a catalog against the framework consistency rules:
///   R1 (error)   duplicate or dangling ids
///   R2 (warning) mimicry hierarchy violated (not M2 >= M3 >= M4)
///   R3 (error)   computed segment differs from an expectation;
///      (warning) computed coordinate differs where one is asserted
///   R4 (warning) override restates what the combination already yields
///   R5 (info)    S10/S11/M1 offered; these never move a marker
/// Findings are sorted by rule, then scheme id.
std::vector<LintFinding> validate(const Catalog& catalog);

/// One finding per line: "<severity> <rule>: <scheme>: <message>".
std::string render_findings(std::span<const LintFinding> findings);

bool has_errors(std::span<const LintFinding> findings);

}  // namespace uds
