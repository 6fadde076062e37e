// Frozen oracle data for the published benefit matrix: expected segments
// and coordinates for the 18 base schemes, and the transcribed combined
// rows (secondary scheme + passwords) from the bottom half of the matrix.
// These literals are transcription, independent of the library's
// combination and placement code paths.
#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "udschart/benefits.hpp"
#include "udschart/placement.hpp"

namespace testdata {

// "U3:F U7:P" -> vector with U3 Full and U7 Partial, everything else Absent.
inline uds::BenefitVector vec(const std::string& cells) {
  uds::BenefitVector v;
  std::istringstream in(cells);
  std::string token;
  while (in >> token) {
    auto colon = token.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad cell " + token);
    auto benefit = uds::parse_benefit(token.substr(0, colon));
    if (!benefit) throw std::invalid_argument("bad benefit in " + token);
    std::string r = token.substr(colon + 1);
    if (r == "F") v.set(*benefit, uds::Rating::Full);
    else if (r == "P") v.set(*benefit, uds::Rating::Partial);
    else throw std::invalid_argument("bad rating in " + token);
  }
  return v;
}

struct ExpectedSegments {
  std::string id;
  uds::VerticalSegment vseg;
  uds::HorizontalSegment hseg;
  std::optional<double> x;
  std::optional<double> y;
  bool errata;
};

// Criterion data: segments for all 18 base schemes; exact coordinates
// only where the published figure and the derived placement agree.
inline const std::vector<ExpectedSegments>& expected_base_placements() {
  using V = uds::VerticalSegment;
  using H = uds::HorizontalSegment;
  static const std::vector<ExpectedSegments> rows = {
      {"pw", V::V1, H::OnAxis, 0.0, 1.0, false},
      {"l1", V::V1, H::OnAxis, 0.0, 1.0, false},
      {"l2", V::V1, H::H2, 8.0, 1.0, false},
      {"l3", V::V1, H::H2, 10.0, 1.0, false},
      {"l4", V::V1, H::H3, 16.0, 1.0, false},
      {"fp1", V::V1, H::OnAxis, std::nullopt, std::nullopt, false},
      {"fp2", V::V1, H::H2, 10.0, 4.0, false},
      {"fp3", V::V1, H::OnAxis, 0.0, 1.0, false},
      {"fp4", V::V1, H::H3, 16.0, 1.0, false},
      {"fp5", V::V1, H::H2, 8.0, 1.0, false},
      {"fp6", V::V1, H::H1, std::nullopt, std::nullopt, true},
      {"otp1", V::V2, H::OnAxis, std::nullopt, std::nullopt, true},
      {"otp2", V::V3, H::OnAxis, 0.0, 16.0, false},
      {"otp3", V::V2, H::H2, std::nullopt, std::nullopt, true},
      {"otp4", V::V2, H::H2, std::nullopt, std::nullopt, true},
      {"puf1", V::V3, H::OnAxis, 0.0, 16.0, false},
      {"puf2", V::V2, H::H2, std::nullopt, std::nullopt, true},
      {"sound_proof", V::V2, H::H2, 10.0, 10.4, false},
  };
  return rows;
}

// The transcribed bottom-half rows, keyed by the combined id used in the
// reference catalog. The four OTP rows are published alongside but are
// not declared in the catalog; they are checked directly against
// combine_profiles.
inline const std::map<std::string, uds::BenefitVector>& expected_combined_rows() {
  static const std::map<std::string, uds::BenefitVector> rows = {
      {"l1_pw", vec("U3:F U5:F U6:F U7:P U8:F U9:F "
                    "D1:F D2:F D4:F D5:F D6:F "
                    "S2:P S8:F S9:P S10:F S11:P M1:F")},
      {"l2_pw", vec("U3:F U5:F U6:F U7:P U8:F "
                    "D1:F D2:F D4:F D5:F D6:F "
                    "S2:P S8:F S10:F S11:P M1:F M2:F M3:P")},
      {"l3_pw", vec("U3:F U5:F U6:P U7:P U8:F "
                    "D1:F D2:F D4:F D5:P D6:F "
                    "S2:P S8:F S9:F S10:F S11:P M1:F M2:F M3:F")},
      {"l4_pw", vec("U3:F U5:F U6:P U7:P U8:F "
                    "D1:F D2:F D4:F D6:F "
                    "S2:P S8:F S9:F S10:F S11:P M1:F M2:F M3:F M4:F")},
      {"fp1_pw", vec("U3:F U5:F U6:F U7:P U8:F "
                     "D1:F D2:F D4:F D5:P D6:F "
                     "S1:P S2:P S3:F S8:F S9:F S10:F S11:P M1:F")},
      {"fp2_pw", vec("U3:F U5:F U6:F U7:P U8:F "
                     "D1:F D2:F D4:F D5:P D6:F "
                     "S1:P S2:P S3:F S8:F S9:F S10:F S11:P M1:F M2:F M3:F")},
      {"fp3_pw", vec("U3:F U5:F U6:F U7:P U8:F "
                     "D1:F D2:F D4:F D6:F "
                     "S1:F S2:F S8:F S9:F S10:F S11:P M1:F")},
      {"fp4_pw", vec("U3:F U5:F U6:F U7:P U8:F "
                     "D1:F D2:F D4:F D6:F "
                     "S1:F S2:F S8:F S9:F S10:F S11:P M1:F M2:F M3:F M4:F")},
      {"fp5_pw", vec("U3:F U5:F U6:F U7:P U8:F "
                     "D1:F D2:F D4:F D5:P D6:F "
                     "S1:P S2:P S8:F S9:F S10:F S11:P M1:F M2:F M3:P")},
      {"fp6_pw", vec("U3:F U5:F U6:F U7:P U8:F "
                     "D1:F D2:F D4:F D5:P D6:F "
                     "S1:P S2:P S8:F S9:F S10:F S11:P M1:F M2:F")},
      {"puf1_pw", vec("U5:F U6:F U7:P U9:F U10:F "
                      "D1:F "
                      "S1:F S2:F S3:F S4:F S5:F S6:F S7:F S8:F S9:F S10:F S11:F M1:F")},
      {"puf2_pw", vec("U5:F U6:F U7:P U9:F "
                      "D1:F D6:F "
                      "S1:F S2:F S3:F S4:F S6:F S7:F S8:F S10:F M1:F M2:F M3:F")},
      {"sound_proof_pw", vec("U3:P U5:F U6:F U7:P U9:P U10:F "
                             "D1:F D2:F D4:F D6:F "
                             "S1:P S2:P S3:F S4:F S6:F S7:F S8:F S9:F S10:F S11:F "
                             "M1:F M2:F M3:F")},
  };
  return rows;
}

// Published OTP + passwords rows; same source, checked outside the
// declared catalog.
inline const std::map<std::string, uds::BenefitVector>& expected_otp_combined_rows() {
  static const std::map<std::string, uds::BenefitVector> rows = {
      {"otp1_pw", vec("U3:P U5:F U7:P U9:F U10:F "
                      "D1:P D2:F D4:F D5:F D6:F "
                      "S1:F S2:F S3:F S4:F S6:F S7:F S8:F S9:F S10:F S11:F M1:F")},
      {"otp2_pw", vec("U5:F U7:P U9:F U10:F "
                      "D1:P D4:P D5:F D6:F "
                      "S1:F S2:F S3:F S4:F S5:F S6:F S7:F S8:F S9:F S10:F S11:F M1:F")},
      {"otp3_pw", vec("U3:P U5:F U7:P U8:P U9:F U10:F "
                      "D1:P D4:F D5:F D6:F "
                      "S1:F S2:P S3:F S4:F S6:F S7:F S8:F S9:F S10:F M1:F M2:F M3:P")},
      {"otp4_pw", vec("U3:F U5:F U7:P U8:F U9:F U10:F "
                      "D1:P D2:F D4:F D5:F D6:F "
                      "S1:F S2:F S3:F S4:F S6:F S7:F S8:F S9:F S10:F S11:P M1:F M2:F M3:P")},
  };
  return rows;
}

}  // namespace testdata
