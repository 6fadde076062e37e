#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "udschart/benefits.hpp"

namespace uds {

/// A declared multi-factor scheme: an ordered list of at least two
/// constituent profile ids, plus optional rating overrides. A record
/// with overrides must state a reason.
struct CombinedScheme {
  std::string id;
  std::string name;  // empty -> derived from part names at materialization
  std::vector<std::string> parts;
  std::vector<std::pair<BenefitId, Rating>> overrides;
  std::string reason;

  bool operator==(const CombinedScheme&) const = default;
};

/// Derives the benefit vector of a multi-factor scheme: usability and
/// deployability benefits are intersected (min over parts), security
/// benefits are unioned (max over parts) except No-Trusted-Third-Party
/// (S9) and Unlinkable (S11), which are intersected. Partial takes part
/// as the middle element of the three-chain.
///
/// The result's id joins the part ids with '_'; name defaults to the
/// part names joined with " + "; category is Other.
/// Rejects fewer than two parts.
SchemeProfile combine_profiles(
    std::span<const SchemeProfile> parts,
    std::span<const std::pair<BenefitId, Rating>> overrides = {},
    std::string_view name = {});

}  // namespace uds
