#include "udschart/benefits.hpp"

#include <algorithm>
#include <cctype>

namespace uds {

namespace {

struct BenefitInfo {
  BenefitId id;
  BenefitClass cls;
  std::string_view code;
  std::string_view name;
};

constexpr std::array<BenefitInfo, kBenefitCount> kBenefits{{
    {BenefitId::U1, BenefitClass::Usability, "U1", "Memorywise-Effortless"},
    {BenefitId::U2, BenefitClass::Usability, "U2", "Scalable-for-Users"},
    {BenefitId::U3, BenefitClass::Usability, "U3", "Nothing-to-Carry"},
    {BenefitId::U4, BenefitClass::Usability, "U4", "Physically-Effortless"},
    {BenefitId::U5, BenefitClass::Usability, "U5", "Easy-to-Learn"},
    {BenefitId::U6, BenefitClass::Usability, "U6", "Efficient-to-Use"},
    {BenefitId::U7, BenefitClass::Usability, "U7", "Infrequent-Errors"},
    {BenefitId::U8, BenefitClass::Usability, "U8", "Easy-Recovery-from-Loss"},
    {BenefitId::U9, BenefitClass::Usability, "U9", "No-False-Rejects"},
    {BenefitId::U10, BenefitClass::Usability, "U10", "Easy-to-Change-Credentials"},
    {BenefitId::D1, BenefitClass::Deployability, "D1", "Accessible"},
    {BenefitId::D2, BenefitClass::Deployability, "D2", "Negligible-Cost-per-User"},
    {BenefitId::D3, BenefitClass::Deployability, "D3", "Server-Compatible"},
    {BenefitId::D4, BenefitClass::Deployability, "D4", "Browser-Compatible"},
    {BenefitId::D5, BenefitClass::Deployability, "D5", "Mature"},
    {BenefitId::D6, BenefitClass::Deployability, "D6", "Non-Proprietary"},
    {BenefitId::S1, BenefitClass::Security, "S1", "Resilient-to-Physical-Observation"},
    {BenefitId::S2, BenefitClass::Security, "S2", "Resilient-to-Targeted-Impersonation"},
    {BenefitId::S3, BenefitClass::Security, "S3", "Resilient-to-Throttled-Guessing"},
    {BenefitId::S4, BenefitClass::Security, "S4", "Resilient-to-Unthrottled-Guessing"},
    {BenefitId::S5, BenefitClass::Security, "S5", "Resilient-to-Internal-Observation"},
    {BenefitId::S6, BenefitClass::Security, "S6", "Resilient-to-Leaks-from-Other-Verifiers"},
    {BenefitId::S7, BenefitClass::Security, "S7", "Resilient-to-Phishing"},
    {BenefitId::S8, BenefitClass::Security, "S8", "Resilient-to-Physical-Theft"},
    {BenefitId::S9, BenefitClass::Security, "S9", "No-Trusted-Third-Party"},
    {BenefitId::S10, BenefitClass::Security, "S10", "Requiring-Explicit-Consent"},
    {BenefitId::S11, BenefitClass::Security, "S11", "Unlinkable"},
    {BenefitId::M1, BenefitClass::Mimicry, "M1", "No-False-Accepts"},
    {BenefitId::M2, BenefitClass::Mimicry, "M2", "Resilient-to-Infrequent-Capture-or-Intercept"},
    {BenefitId::M3, BenefitClass::Mimicry, "M3", "Verifies-Non-Static-Information"},
    {BenefitId::M4, BenefitClass::Mimicry, "M4", "Resilient-to-Spoofing"},
}};

const BenefitInfo& info(BenefitId b) { return kBenefits[static_cast<std::size_t>(b)]; }

}  // namespace

const std::array<BenefitId, kBenefitCount>& all_benefits() {
  static const std::array<BenefitId, kBenefitCount> ids = [] {
    std::array<BenefitId, kBenefitCount> out{};
    for (std::size_t i = 0; i < kBenefitCount; ++i) out[i] = kBenefits[i].id;
    return out;
  }();
  return ids;
}

BenefitClass benefit_class(BenefitId b) { return info(b).cls; }
std::string_view benefit_code(BenefitId b) { return info(b).code; }
std::string_view benefit_name(BenefitId b) { return info(b).name; }

std::optional<BenefitId> parse_benefit(std::string_view code) {
  std::string upper(code);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (const auto& b : kBenefits) {
    if (b.code == upper) return b.id;
  }
  return std::nullopt;
}

std::string_view to_string(Rating r) {
  switch (r) {
    case Rating::Absent: return "absent";
    case Rating::Partial: return "partial";
    case Rating::Full: return "full";
  }
  return "absent";
}

std::optional<Rating> parse_rating(std::string_view token) {
  std::string lower(token);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "absent") return Rating::Absent;
  if (lower == "partial") return Rating::Partial;
  if (lower == "full") return Rating::Full;
  return std::nullopt;
}

bool dominates(const BenefitVector& a, const BenefitVector& b) {
  for (BenefitId id : all_benefits()) {
    if (a.rating(id) < b.rating(id)) return false;
  }
  return true;
}

std::string_view to_string(Category c) {
  switch (c) {
    case Category::Password: return "password";
    case Category::Geolocation: return "geolocation";
    case Category::Fingerprinting: return "fingerprinting";
    case Category::Otp: return "otp";
    case Category::Puf: return "puf";
    case Category::Other: return "other";
  }
  return "other";
}

std::optional<Category> parse_category(std::string_view token) {
  if (token == "password") return Category::Password;
  if (token == "geolocation") return Category::Geolocation;
  if (token == "fingerprinting") return Category::Fingerprinting;
  if (token == "otp") return Category::Otp;
  if (token == "puf") return Category::Puf;
  if (token == "other") return Category::Other;
  return std::nullopt;
}

Rating rating_of(const SchemeProfile& profile, BenefitId b) {
  return profile.vector.rating(b);
}

Rating merged_s6(const BenefitVector& v) {
  return rating_min(v.rating(BenefitId::S6), v.rating(BenefitId::S9));
}

}  // namespace uds
