#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace uds {

/// Three-valued offering level for a benefit. Totally ordered:
/// Absent < Partial < Full.
enum class Rating : std::uint8_t { Absent = 0, Partial = 1, Full = 2 };

constexpr Rating rating_min(Rating a, Rating b) { return a < b ? a : b; }
constexpr Rating rating_max(Rating a, Rating b) { return a < b ? b : a; }

std::string_view to_string(Rating r);
std::optional<Rating> parse_rating(std::string_view token);

enum class BenefitClass : std::uint8_t {
  Usability,
  Deployability,
  Security,
  Mimicry,
};

/// The 31 framework properties: U1-U10 usability, D1-D6 deployability,
/// S1-S11 security, M1-M4 mimicry.
enum class BenefitId : std::uint8_t {
  U1, U2, U3, U4, U5, U6, U7, U8, U9, U10,
  D1, D2, D3, D4, D5, D6,
  S1, S2, S3, S4, S5, S6, S7, S8, S9, S10, S11,
  M1, M2, M3, M4,
};

inline constexpr std::size_t kBenefitCount = 31;

/// All 31 identifiers in canonical U1..M4 order.
const std::array<BenefitId, kBenefitCount>& all_benefits();

BenefitClass benefit_class(BenefitId b);
std::string_view benefit_code(BenefitId b);  // "U1", "S3", ...
std::string_view benefit_name(BenefitId b);  // "Resilient-to-Throttled-Guessing", ...

/// Case-insensitive lookup of a benefit code such as "s3" or "M2".
std::optional<BenefitId> parse_benefit(std::string_view code);

/// Total mapping BenefitId -> Rating. Every key is always present;
/// a default-constructed vector rates everything Absent.
class BenefitVector {
 public:
  constexpr BenefitVector() = default;

  Rating rating(BenefitId b) const { return ratings_[index(b)]; }
  void set(BenefitId b, Rating r) { ratings_[index(b)] = r; }

  bool operator==(const BenefitVector&) const = default;

 private:
  static std::size_t index(BenefitId b) { return static_cast<std::size_t>(b); }
  std::array<Rating, kBenefitCount> ratings_{};
};

/// True if a rates every benefit at least as high as b.
bool dominates(const BenefitVector& a, const BenefitVector& b);

enum class Category : std::uint8_t {
  Password,
  Geolocation,
  Fingerprinting,
  Otp,
  Puf,
  Other,
};

std::string_view to_string(Category c);
std::optional<Category> parse_category(std::string_view token);

/// A named authentication scheme with its full benefit vector.
struct SchemeProfile {
  std::string id;  // lowercase token, [a-z0-9_-]+
  std::string name;
  Category category = Category::Other;
  BenefitVector vector;
  std::string notes;

  bool operator==(const SchemeProfile&) const = default;
};

Rating rating_of(const SchemeProfile& profile, BenefitId b);

/// Effective leak-resistance benefit used by V2 sublevel counting:
/// min(rating(S6), rating(S9)). A scheme only gets the merged credit
/// when it resists leaks from other verifiers and needs no trusted
/// third party.
Rating merged_s6(const BenefitVector& v);

// Benefit sets that drive placement. S10, S11 and M1 take part in no
// gate or governing set; they never move a marker.
namespace gates {

inline constexpr std::array<BenefitId, 2> v2_gate{BenefitId::S3, BenefitId::S4};
inline constexpr std::array<BenefitId, 7> v3_gate{
    BenefitId::S1, BenefitId::S3, BenefitId::S4, BenefitId::S5,
    BenefitId::S6, BenefitId::S7, BenefitId::S9};

inline constexpr std::array<BenefitId, 2> v1_governing{BenefitId::S3, BenefitId::S4};
// V2's governing multiset is {S1, S5, S6m, S7} where S6m = merged_s6();
// it is materialized by placement code rather than listed here.
inline constexpr std::array<BenefitId, 2> v3_governing{BenefitId::S2, BenefitId::S8};

// One governing benefit per horizontal segment: H1, H2, H3.
inline constexpr std::array<BenefitId, 3> h_governing{
    BenefitId::M2, BenefitId::M3, BenefitId::M4};

// Benefits combined with min instead of max when merging schemes.
inline constexpr std::array<BenefitId, 2> security_min_exceptions{
    BenefitId::S9, BenefitId::S11};

}  // namespace gates

}  // namespace uds
