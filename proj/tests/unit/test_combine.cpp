#include <random>

#include "doctest.h"
#include "support/generators.hpp"
#include "support/table3.hpp"
#include "udschart/catalog.hpp"
#include "udschart/combine.hpp"
#include "udschart/placement.hpp"

using namespace uds;

namespace {

SchemeProfile combine_ids(const char* a, const char* b) {
  const Catalog& ref = reference_catalog();
  std::vector<SchemeProfile> parts{*ref.find_scheme(a), *ref.find_scheme(b)};
  return combine_profiles(parts);
}

std::string mismatches(const BenefitVector& got, const BenefitVector& want) {
  std::string out;
  for (BenefitId b : all_benefits()) {
    if (got.rating(b) != want.rating(b)) {
      out += std::string(benefit_code(b)) + "(got " +
             std::string(to_string(got.rating(b))) + ", want " +
             std::string(to_string(want.rating(b))) + ") ";
    }
  }
  return out;
}

}  // namespace

TEST_CASE("PW + OTP2 reproduces the published combined row") {
  SchemeProfile combined = combine_ids("pw", "otp2");
  CHECK(combined.vector.rating(BenefitId::U3) == Rating::Absent);
  CHECK(combined.vector.rating(BenefitId::S5) == Rating::Full);
  CHECK(combined.vector.rating(BenefitId::S8) == Rating::Full);
  const auto& want = testdata::expected_otp_combined_rows().at("otp2_pw");
  INFO(mismatches(combined.vector, want));
  CHECK(combined.vector == want);
}

TEST_CASE("PW + PUF2 drops the min-combined exceptions") {
  SchemeProfile combined = combine_ids("pw", "puf2");
  CHECK(combined.vector.rating(BenefitId::S9) == Rating::Absent);
  CHECK(combined.vector.rating(BenefitId::S11) == Rating::Absent);
}

TEST_CASE("PW + L1 mixes partial ratings through min and max") {
  SchemeProfile combined = combine_ids("pw", "l1");
  CHECK(combined.vector.rating(BenefitId::S2) == Rating::Partial);
  CHECK(combined.vector.rating(BenefitId::U7) == Rating::Partial);
}

TEST_CASE("combining a profile with itself is the identity") {
  const Catalog& ref = reference_catalog();
  std::mt19937 rng(3);
  for (const auto& scheme : ref.schemes) {
    std::vector<SchemeProfile> parts{scheme, scheme};
    CHECK(combine_profiles(parts).vector == scheme.vector);
  }
  for (int i = 0; i < 500; ++i) {
    SchemeProfile s;
    s.id = "x";
    s.vector = testgen::random_vector(rng);
    std::vector<SchemeProfile> parts{s, s};
    CHECK(combine_profiles(parts).vector == s.vector);
  }
}

TEST_CASE("every published combined row is reproduced with zero overrides") {
  const Catalog& ref = reference_catalog();
  for (const auto& [id, want] : testdata::expected_combined_rows()) {
    const CombinedScheme* entry = ref.find_combined(id);
    REQUIRE(entry != nullptr);
    CHECK(entry->overrides.empty());
    SchemeProfile got = ref.materialize(*entry);
    CAPTURE(id);
    INFO(mismatches(got.vector, want));
    CHECK(got.vector == want);
  }
}

TEST_CASE("the published OTP + PW rows are reproduced as well") {
  for (const auto& [id, want] : testdata::expected_otp_combined_rows()) {
    std::string base_id = id.substr(0, id.find('_'));
    SchemeProfile got = combine_ids(base_id.c_str(), "pw");
    CAPTURE(id);
    INFO(mismatches(got.vector, want));
    CHECK(got.vector == want);
  }
}

TEST_CASE("combination is a lattice fold: commutative, associative, idempotent") {
  std::mt19937 rng(17);
  for (int i = 0; i < 1000; ++i) {
    SchemeProfile a, b, c;
    a.vector = testgen::random_vector(rng);
    b.vector = testgen::random_vector(rng);
    c.vector = testgen::random_vector(rng);

    std::vector<SchemeProfile> ab{a, b}, ba{b, a};
    CHECK(combine_profiles(ab).vector == combine_profiles(ba).vector);

    std::vector<SchemeProfile> abc{a, b, c};
    std::vector<SchemeProfile> ab_c{combine_profiles(ab), c};
    std::vector<SchemeProfile> a_bc{a, combine_profiles({std::vector<SchemeProfile>{b, c}})};
    CHECK(combine_profiles(abc).vector == combine_profiles(ab_c).vector);
    CHECK(combine_profiles(abc).vector == combine_profiles(a_bc).vector);

    std::vector<SchemeProfile> aab{a, a, b};
    CHECK(combine_profiles(aab).vector == combine_profiles(ab).vector);
  }
}

TEST_CASE("security dominates, usability and the exceptions anti-dominate") {
  std::mt19937 rng(19);
  for (int i = 0; i < 1000; ++i) {
    SchemeProfile a, b;
    a.vector = testgen::random_vector(rng);
    b.vector = testgen::random_vector(rng);
    BenefitVector combined = combine_profiles(std::vector<SchemeProfile>{a, b}).vector;
    for (BenefitId benefit : all_benefits()) {
      BenefitClass cls = benefit_class(benefit);
      bool min_rule = cls == BenefitClass::Usability || cls == BenefitClass::Deployability ||
                      benefit == BenefitId::S9 || benefit == BenefitId::S11;
      Rating r = combined.rating(benefit);
      if (min_rule) {
        CHECK(r <= a.vector.rating(benefit));
        CHECK(r <= b.vector.rating(benefit));
      } else {
        CHECK(r >= a.vector.rating(benefit));
        CHECK(r >= b.vector.rating(benefit));
      }
    }
  }
}

TEST_CASE("marker rule lower-bounds the placed combination when S9/S11 agree") {
  std::mt19937 rng(23);
  for (int i = 0; i < 1000; ++i) {
    SchemeProfile a, b;
    a.vector = testgen::random_vector(rng);
    b.vector = testgen::random_vector(rng);
    b.vector.set(BenefitId::S9, a.vector.rating(BenefitId::S9));
    b.vector.set(BenefitId::S11, a.vector.rating(BenefitId::S11));
    Placement pa = place(a);
    Placement pb = place(b);
    Placement pc = place(combine_profiles(std::vector<SchemeProfile>{a, b}));
    auto [mx, my] = combine_markers(pa, pb);
    CHECK(pc.x >= mx);
    CHECK(pc.y >= my);
  }
}

TEST_CASE("fewer than two parts is rejected") {
  std::vector<SchemeProfile> one{SchemeProfile{}};
  CHECK_THROWS_AS(combine_profiles(one), std::invalid_argument);
  CHECK_THROWS_AS(combine_profiles(std::vector<SchemeProfile>{}), std::invalid_argument);
}

TEST_CASE("names default to the part names joined with ' + '") {
  SchemeProfile combined = combine_ids("puf1", "pw");
  CHECK(combined.name == "PUF1 + PW");
  CHECK(combined.id == "puf1_pw");

  const Catalog& ref = reference_catalog();
  std::vector<SchemeProfile> parts{*ref.find_scheme("puf1"), *ref.find_scheme("pw")};
  CHECK(combine_profiles(parts, {}, "Custom").name == "Custom");
}

TEST_CASE("overrides are applied after the fold") {
  const Catalog& ref = reference_catalog();
  std::vector<std::pair<BenefitId, Rating>> overrides{{BenefitId::S5, Rating::Partial}};
  std::vector<SchemeProfile> parts{*ref.find_scheme("pw"), *ref.find_scheme("otp2")};
  SchemeProfile combined = combine_profiles(parts, overrides);
  CHECK(combined.vector.rating(BenefitId::S5) == Rating::Partial);
}
