#include "udschart/combine.hpp"

#include <algorithm>
#include <stdexcept>

namespace uds {

namespace {

bool combines_with_min(BenefitId b) {
  BenefitClass cls = benefit_class(b);
  if (cls == BenefitClass::Usability || cls == BenefitClass::Deployability) return true;
  return std::find(gates::security_min_exceptions.begin(),
                   gates::security_min_exceptions.end(),
                   b) != gates::security_min_exceptions.end();
}

}  // namespace

SchemeProfile combine_profiles(std::span<const SchemeProfile> parts,
                               std::span<const std::pair<BenefitId, Rating>> overrides,
                               std::string_view name) {
  if (parts.size() < 2)
    throw std::invalid_argument("combine_profiles: need at least two parts");

  SchemeProfile out;
  out.category = Category::Other;
  for (const SchemeProfile& part : parts) {
    if (!out.id.empty()) {
      out.id += '_';
      out.name += " + ";
    }
    out.id += part.id;
    out.name += part.name;
  }
  if (!name.empty()) out.name = name;

  for (BenefitId b : all_benefits()) {
    Rating acc = parts.front().vector.rating(b);
    for (const SchemeProfile& part : parts.subspan(1)) {
      Rating r = part.vector.rating(b);
      acc = combines_with_min(b) ? rating_min(acc, r) : rating_max(acc, r);
    }
    out.vector.set(b, acc);
  }

  for (const auto& [benefit, rating] : overrides) out.vector.set(benefit, rating);
  return out;
}

}  // namespace uds
