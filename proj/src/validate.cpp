#include "udschart/validate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "udschart/numeric.hpp"
#include "udschart/placement.hpp"

namespace uds {

namespace {

bool materializable(const Catalog& catalog, const CombinedScheme& c) {
  if (c.parts.size() < 2) return false;
  if (!c.overrides.empty() && c.reason.empty()) return false;
  return std::all_of(c.parts.begin(), c.parts.end(), [&](const auto& id) {
    return catalog.find_scheme(id) != nullptr;
  });
}

void check_ids(const Catalog& catalog, std::vector<LintFinding>& findings) {
  std::map<std::string, int> counts;
  for (const auto& s : catalog.schemes) ++counts[s.id];
  for (const auto& c : catalog.combined) ++counts[c.id];
  for (const auto& [id, n] : counts) {
    if (n > 1)
      findings.push_back({"R1", Severity::Error, id, "duplicate id"});
  }
  std::set<std::string> scheme_ids;
  for (const auto& s : catalog.schemes) scheme_ids.insert(s.id);
  for (const auto& c : catalog.combined) {
    for (const auto& part : c.parts) {
      if (!scheme_ids.count(part))
        findings.push_back({"R1", Severity::Error, c.id,
                            "dangling part reference '" + part + "'"});
    }
  }
  for (const auto& c : catalog.combined) {
    if (!c.overrides.empty() && c.reason.empty())
      findings.push_back({"R1", Severity::Error, c.id, "override without reason"});
    if (c.parts.size() < 2)
      findings.push_back({"R1", Severity::Error, c.id, "fewer than two parts"});
  }
  std::set<std::string> all_ids = scheme_ids;
  for (const auto& c : catalog.combined) all_ids.insert(c.id);
  for (const auto& e : catalog.expectations) {
    if (!all_ids.count(e.scheme_id))
      findings.push_back({"R1", Severity::Error, e.scheme_id,
                          "expectation references unknown id"});
  }
}

void check_m_hierarchy(const std::string& id, const BenefitVector& v,
                       std::vector<LintFinding>& findings) {
  Rating m2 = v.rating(BenefitId::M2);
  Rating m3 = v.rating(BenefitId::M3);
  Rating m4 = v.rating(BenefitId::M4);
  if (m2 >= m3 && m3 >= m4) return;
  std::ostringstream msg;
  msg << "mimicry hierarchy violated: M2=" << to_string(m2) << ", M3=" << to_string(m3)
      << ", M4=" << to_string(m4) << " (expected M2 >= M3 >= M4)";
  findings.push_back({"R2", Severity::Warning, id, msg.str()});
}

void check_expectations(const Catalog& catalog, std::vector<LintFinding>& findings) {
  for (const auto& e : catalog.expectations) {
    if (const CombinedScheme* c = catalog.find_combined(e.scheme_id)) {
      if (!materializable(catalog, *c)) continue;  // ill-formed, reported by R1
    }
    auto profile = catalog.resolve(e.scheme_id);
    if (!profile) continue;  // dangling, reported by R1
    Placement p = place(*profile);
    if (p.vseg != e.vseg || p.hseg != e.hseg) {
      std::ostringstream msg;
      msg << "segment mismatch: expected " << segment_code(e.vseg) << "/"
          << segment_code(e.hseg) << ", computed " << segment_code(p.vseg) << "/"
          << segment_code(p.hseg);
      findings.push_back({"R3", Severity::Error, e.scheme_id, msg.str()});
    }
    if (e.x && *e.x != p.x)
      findings.push_back({"R3", Severity::Warning, e.scheme_id,
                          "coordinate mismatch: expected x=" + format_decimal(*e.x) +
                              ", computed x=" + format_decimal(p.x)});
    if (e.y && *e.y != p.y)
      findings.push_back({"R3", Severity::Warning, e.scheme_id,
                          "coordinate mismatch: expected y=" + format_decimal(*e.y) +
                              ", computed y=" + format_decimal(p.y)});
  }
}

void check_redundant_overrides(const Catalog& catalog, std::vector<LintFinding>& findings) {
  for (const auto& c : catalog.combined) {
    if (c.overrides.empty() || !materializable(catalog, c)) continue;
    CombinedScheme bare = c;
    bare.overrides.clear();
    SchemeProfile computed = catalog.materialize(bare);
    for (const auto& [benefit, rating] : c.overrides) {
      if (computed.vector.rating(benefit) == rating)
        findings.push_back({"R4", Severity::Warning, c.id,
                            "redundant override: combination already yields " +
                                std::string(benefit_code(benefit)) + " = " +
                                std::string(to_string(rating))});
    }
  }
}

void check_placement_neutral(const Catalog& catalog, std::vector<LintFinding>& findings) {
  constexpr std::array<BenefitId, 3> neutral{BenefitId::S10, BenefitId::S11, BenefitId::M1};
  for (const auto& s : catalog.schemes) {
    std::string offered;
    for (BenefitId b : neutral) {
      if (s.vector.rating(b) != Rating::Absent) {
        if (!offered.empty()) offered += ", ";
        offered += benefit_code(b);
      }
    }
    if (!offered.empty())
      findings.push_back({"R5", Severity::Info, s.id,
                          "offers " + offered + "; these do not affect placement"});
  }
}

}  // namespace

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
  }
  return "info";
}

std::vector<LintFinding> validate(const Catalog& catalog) {
  std::vector<LintFinding> findings;
  check_ids(catalog, findings);
  for (const auto& s : catalog.schemes) check_m_hierarchy(s.id, s.vector, findings);
  for (const auto& c : catalog.combined) {
    if (materializable(catalog, c))
      check_m_hierarchy(c.id, catalog.materialize(c).vector, findings);
  }
  check_expectations(catalog, findings);
  check_redundant_overrides(catalog, findings);
  check_placement_neutral(catalog, findings);

  std::stable_sort(findings.begin(), findings.end(), [](const auto& a, const auto& b) {
    if (a.rule != b.rule) return a.rule < b.rule;
    if (a.scheme != b.scheme) return a.scheme < b.scheme;
    return a.message < b.message;
  });
  return findings;
}

std::string render_findings(std::span<const LintFinding> findings) {
  std::ostringstream out;
  for (const auto& f : findings)
    out << to_string(f.severity) << " " << f.rule << ": " << f.scheme << ": " << f.message
        << "\n";
  return out.str();
}

bool has_errors(std::span<const LintFinding> findings) {
  return std::any_of(findings.begin(), findings.end(),
                     [](const auto& f) { return f.severity == Severity::Error; });
}

}  // namespace uds
