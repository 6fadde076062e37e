// Acceptance suite: reproduces the published evaluation end to end and
// prints one pass/fail line per criterion.
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "support/generators.hpp"
#include "support/table3.hpp"
#include "udschart/chart.hpp"
#include "udschart/report.hpp"
#include "udschart/validate.hpp"

using namespace uds;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::ostream&)> check;
};

int count_occurrences(const std::string& haystack, const std::string& needle) {
  int count = 0;
  std::size_t pos = 0;
  while ((pos = haystack.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

bool segment_reproduction(std::ostream& log) {
  const Catalog& ref = reference_catalog();
  int matched = 0;
  int total = 0;
  for (const auto& expect : testdata::expected_base_placements()) {
    ++total;
    Placement p = place(*ref.find_scheme(expect.id));
    if (p.vseg == expect.vseg && p.hseg == expect.hseg) {
      ++matched;
    } else {
      log << "  " << expect.id << ": computed (" << segment_code(p.vseg) << ","
          << segment_code(p.hseg) << "), expected (" << segment_code(expect.vseg) << ","
          << segment_code(expect.hseg) << ")\n";
    }
  }
  log << "  " << matched << "/" << total << " segments match\n";
  return matched == total && total == 18;
}

bool exact_coordinates(std::ostream& log) {
  const Catalog& ref = reference_catalog();
  int matched = 0;
  int asserted = 0;
  int errata = 0;
  for (const auto& expect : testdata::expected_base_placements()) {
    Placement p = place(*ref.find_scheme(expect.id));
    if (expect.x && expect.y) {
      ++asserted;
      if (p.x == *expect.x && p.y == *expect.y) {
        ++matched;
      } else {
        log << "  " << expect.id << ": computed (" << p.x << "," << p.y << "), expected ("
            << *expect.x << "," << *expect.y << ")\n";
      }
    }
    if (expect.errata) {
      // Drift schemes carry an errata note in the catalog and no
      // coordinate assertion.
      const ExpectedPlacement* entry = nullptr;
      for (const auto& e : ref.expectations)
        if (e.scheme_id == expect.id) entry = &e;
      if (entry && !entry->errata.empty() && !entry->x && !entry->y) ++errata;
    }
  }
  log << "  " << matched << "/" << asserted << " coordinate pairs match exactly, " << errata
      << "/5 errata entries present\n";
  return matched == asserted && asserted == 12 && errata == 5;
}

bool worked_sublevels(std::ostream& log) {
  bool ok = sublevel_from_counts(4, 0, 4) == 5 && sublevel_from_counts(4, 1, 1) == 7 &&
            sublevel_from_counts(4, 0, 0) == 1 && sublevel_count(2) == 5 &&
            sublevel_count(4) == 14 && sublevel_count(1) == 2;
  log << "  sublevel_from_counts(4,0,4)=" << sublevel_from_counts(4, 0, 4)
      << ", (4,1,1)=" << sublevel_from_counts(4, 1, 1)
      << ", (4,0,0)=" << sublevel_from_counts(4, 0, 0)
      << "; counts 5/14/5 for N=2/4/2: " << sublevel_count(2) << "/" << sublevel_count(4)
      << "/" << sublevel_count(2) << "\n";
  return ok;
}

bool combination_oracle(std::ostream& log) {
  const Catalog& ref = reference_catalog();
  const auto& expected = testdata::expected_combined_rows();
  if (ref.combined.size() != 13 || expected.size() != 13) {
    log << "  expected 13 combined declarations, catalog has " << ref.combined.size()
        << ", oracle has " << expected.size() << "\n";
    return false;
  }
  int matched_cells = 0;
  int total_cells = 0;
  int overrides = 0;
  for (const auto& entry : ref.combined) {
    overrides += static_cast<int>(entry.overrides.size());
    SchemeProfile got = ref.materialize(entry);
    const BenefitVector& want = expected.at(entry.id);
    for (BenefitId b : all_benefits()) {
      ++total_cells;
      if (got.vector.rating(b) == want.rating(b)) {
        ++matched_cells;
      } else {
        log << "  " << entry.id << " " << benefit_code(b) << ": computed "
            << to_string(got.vector.rating(b)) << ", published "
            << to_string(want.rating(b)) << "\n";
      }
    }
  }
  log << "  " << matched_cells << "/" << total_cells << " cells match, " << overrides
      << " overrides (target 0, cap 5)\n";
  return matched_cells == total_cells && total_cells == 403 && overrides == 0 &&
         overrides <= 5;
}

bool marker_rule(std::ostream& log) {
  const Catalog& ref = reference_catalog();
  Placement l4 = place(*ref.find_scheme("l4"));
  Placement otp2 = place(*ref.find_scheme("otp2"));
  auto [x, y] = combine_markers(l4, otp2);
  bool in_h3 = x > 12.0 && x < 18.0;
  bool in_v3 = y > 12.0 && y < 18.0;
  log << "  combine_markers(L4, OTP2) = (" << x << "," << y << ")\n";
  return x == 16.0 && y == 16.0 && in_h3 && in_v3;
}

bool property_suites(std::ostream& log) {
  std::mt19937 rng(20260810);
  int failures = 0;

  // Lattice laws and dominance, 1000 random triples.
  for (int i = 0; i < 1000; ++i) {
    SchemeProfile a, b, c;
    a.vector = testgen::random_vector(rng);
    b.vector = testgen::random_vector(rng);
    c.vector = testgen::random_vector(rng);
    auto fold = [](std::vector<SchemeProfile> parts) {
      return combine_profiles(parts).vector;
    };
    if (fold({a, b}) != fold({b, a})) ++failures;
    SchemeProfile ab;
    ab.vector = fold({a, b});
    SchemeProfile bc;
    bc.vector = fold({b, c});
    if (fold({a, b, c}) != fold({ab, c}) || fold({a, b, c}) != fold({a, bc})) ++failures;
    if (fold({a, a}) != a.vector) ++failures;

    BenefitVector combined = fold({a, b});
    for (BenefitId benefit : all_benefits()) {
      BenefitClass cls = benefit_class(benefit);
      bool min_rule = cls == BenefitClass::Usability || cls == BenefitClass::Deployability ||
                      benefit == BenefitId::S9 || benefit == BenefitId::S11;
      Rating r = combined.rating(benefit);
      Rating ra = a.vector.rating(benefit);
      Rating rb = b.vector.rating(benefit);
      if (min_rule && (r > ra || r > rb)) ++failures;
      if (!min_rule && (r < ra || r < rb)) ++failures;
    }
  }

  // Placement monotonicity, 1000 random upgrade pairs.
  for (int i = 0; i < 1000; ++i) {
    SchemeProfile lo, hi;
    lo.vector = testgen::random_vector(rng);
    hi.vector = testgen::random_upgrade(rng, lo.vector);
    Placement pl = place(lo);
    Placement ph = place(hi);
    bool v_ok = ph.vseg > pl.vseg || (ph.vseg == pl.vseg && ph.vsub >= pl.vsub);
    bool h_ok = ph.hseg > pl.hseg || (ph.hseg == pl.hseg && ph.hsub >= pl.hsub);
    if (!v_ok || !h_ok || ph.x < pl.x || ph.y < pl.y) ++failures;
  }

  // Coordinate bounds and boundary exclusion, 1000 random vectors.
  for (int i = 0; i < 1000; ++i) {
    SchemeProfile s;
    s.vector = testgen::random_vector(rng);
    Placement p = place(s);
    if (!(p.x >= 0.0 && p.x < 18.0 && p.y > 0.0 && p.y < 18.0)) ++failures;
    if (p.x == 6.0 || p.x == 12.0 || p.x == 18.0) ++failures;
    if (p.y == 6.0 || p.y == 12.0 || p.y == 18.0) ++failures;
  }

  // Brute-force sublevel oracle, exhaustive for N in 1..4.
  for (int n = 1; n <= 4; ++n) {
    if (testgen::brute_force_count(n) != sublevel_count(n)) ++failures;
    for (int f = 0; f <= n; ++f)
      for (int p = 0; p + f <= n; ++p)
        if (testgen::brute_force_sublevel(n, f, p) != sublevel_from_counts(n, f, p))
          ++failures;
  }

  log << "  3000 randomized cases plus exhaustive oracle, " << failures << " failures\n";
  return failures == 0;
}

bool validator_checks(std::ostream& log) {
  auto reference_findings = validate(reference_catalog());
  int reference_errors = 0;
  int reference_r2 = 0;
  for (const auto& f : reference_findings) {
    if (f.severity == Severity::Error) ++reference_errors;
    if (f.rule == "R2") ++reference_r2;
  }

  Catalog with_bad_scheme = reference_catalog();
  SchemeProfile bad;
  bad.id = "zz_injected";
  bad.vector.set(BenefitId::M4, Rating::Full);
  with_bad_scheme.schemes.push_back(bad);
  int injected_r2 = 0;
  for (const auto& f : validate(with_bad_scheme))
    if (f.rule == "R2") ++injected_r2;

  Catalog with_bad_expect = reference_catalog();
  for (auto& e : with_bad_expect.expectations)
    if (e.scheme_id == "l4") e.vseg = VerticalSegment::V2;
  int injected_r3 = 0;
  for (const auto& f : validate(with_bad_expect))
    if (f.rule == "R3" && f.severity == Severity::Error) ++injected_r3;

  log << "  reference: " << reference_errors << " errors, " << reference_r2
      << " R2 warnings; injected M4 profile: " << injected_r2
      << " R2 warning(s); injected wrong segment: " << injected_r3 << " R3 error(s)\n";
  return reference_errors == 0 && reference_r2 == 0 && injected_r2 == 1 && injected_r3 == 1;
}

bool roundtrip_and_rendering(std::ostream& log) {
  const Catalog& ref = reference_catalog();
  bool roundtrip = parse_catalog(serialize_catalog(ref)) == ref;

  std::string svg = render_svg(ref);
  int bands = count_occurrences(svg, "class=\"band\"");
  int gridlines = count_occurrences(svg, "class=\"gridline\"");
  std::set<std::pair<double, double>> base_points;
  for (const auto& s : ref.schemes) {
    Placement p = place(s);
    base_points.insert({p.x, p.y});
  }
  int markers = count_occurrences(svg, "class=\"marker\"");
  bool coalesced = count_occurrences(svg, ">OTP2, PUF1<") == 1;

  TableSpec csv{TableFormat::Csv, false};
  TableSpec md{TableFormat::Markdown, false};
  bool deterministic = render_table(ref, csv) == render_table(ref, csv) &&
                       render_table(ref, md) == render_table(ref, md) &&
                       render_svg(ref) == svg;

  log << "  roundtrip=" << (roundtrip ? "ok" : "FAIL") << ", bands=" << bands
      << ", gridlines=" << gridlines << ", markers=" << markers << " (distinct coords "
      << base_points.size() << "), OTP2/PUF1 label " << (coalesced ? "coalesced" : "MISSING")
      << ", deterministic=" << (deterministic ? "yes" : "NO") << "\n";
  return roundtrip && bands == 3 && gridlines == 6 &&
         markers == static_cast<int>(base_points.size()) && coalesced && deterministic;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"segment reproduction (18 base schemes)", segment_reproduction},
      {"exact coordinates for the agreement subset", exact_coordinates},
      {"worked sublevel examples", worked_sublevels},
      {"combination oracle (13 rows x 31 cells)", combination_oracle},
      {"multi-factor marker rule", marker_rule},
      {"property suites (randomized)", property_suites},
      {"validator rules", validator_checks},
      {"round-trip and rendering", roundtrip_and_rendering},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::ostringstream log;
    bool ok = false;
    try {
      ok = criteria[i].check(log);
    } catch (const std::exception& e) {
      log << "  exception: " << e.what() << "\n";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
              << criteria[i].name << "\n"
              << log.str();
    if (!ok) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : "criteria failed") << " ("
            << (criteria.size() - failed) << "/" << criteria.size() << ")\n";
  return failed == 0 ? 0 : 1;
}
