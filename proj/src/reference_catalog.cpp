#include "udschart/catalog.hpp"

namespace uds {

namespace {

// Benefit matrix for the 18 base schemes and the 13 password
// combinations, plus expected chart segments for every base scheme.
// Exact coordinates are asserted only where the published figure and
// the benefit-derived placement agree; the five disagreements are
// recorded as errata instead of being resolved.
constexpr std::string_view kReferenceCatalog = R"CAT(# Reference catalog: augmented UDS benefit matrix and chart placements.

[scheme pw]
name = PW
category = password
notes = Web passwords
U3 = full
U5 = full
U6 = full
U7 = partial
U8 = full
U9 = full
U10 = full
D1 = full
D2 = full
D3 = full
D4 = full
D5 = full
D6 = full
S2 = partial
S8 = full
S9 = full
S10 = full
S11 = full
M1 = full

[scheme l1]
name = L1
category = geolocation
notes = GPS and WPS
U1 = full
U2 = full
U3 = full
U4 = full
U5 = full
U6 = full
U7 = partial
U8 = full
U9 = full
D1 = full
D2 = full
D4 = full
D5 = full
D6 = full
S8 = full
S9 = partial
S10 = partial
S11 = partial

[scheme l2]
name = L2
category = geolocation
notes = IP-address based tabulation
U1 = full
U2 = full
U3 = full
U4 = full
U5 = full
U6 = full
U7 = partial
U8 = full
D1 = full
D2 = full
D4 = full
D5 = full
D6 = full
S8 = full
S11 = partial
M2 = full
M3 = partial

[scheme l3]
name = L3
category = geolocation
notes = Measurement-based geolocation
U1 = full
U2 = full
U3 = full
U4 = full
U5 = full
U6 = partial
U7 = partial
U8 = full
D1 = full
D2 = full
D4 = full
D5 = partial
D6 = full
S8 = full
S9 = full
S11 = partial
M2 = full
M3 = full

[scheme l4]
name = L4
category = geolocation
notes = Robust location verification
U1 = full
U2 = full
U3 = full
U4 = full
U5 = full
U6 = partial
U7 = partial
U8 = full
D1 = full
D2 = full
D4 = full
D6 = full
S8 = full
S9 = full
S11 = partial
M2 = full
M3 = full
M4 = full

[scheme fp1]
name = FP1
category = fingerprinting
notes = System parameters and preferences
U1 = full
U2 = full
U3 = full
U4 = full
U5 = full
U6 = full
U7 = full
U8 = full
D1 = full
D2 = full
D4 = full
D5 = partial
D6 = full
S1 = partial
S2 = partial
S3 = full
S9 = full
S11 = partial

[scheme fp2]
name = FP2
category = fingerprinting
notes = Audio and canvas challenge-response
U1 = full
U2 = full
U3 = full
U4 = full
U5 = full
U6 = full
U7 = full
U8 = full
D1 = full
D2 = full
D4 = full
D5 = partial
D6 = full
S1 = partial
S2 = partial
S3 = full
S9 = full
S11 = partial
M2 = full
M3 = full

[scheme fp3]
name = FP3
category = fingerprinting
notes = Hardware sensors
U1 = full
U2 = full
U3 = full
U4 = full
U5 = full
U6 = full
U7 = full
U8 = full
D1 = full
D2 = full
D4 = full
D6 = full
S1 = full
S2 = full
S9 = full
S11 = partial

[scheme fp4]
name = FP4
category = fingerprinting
notes = Clock skew
U1 = full
U2 = full
U3 = full
U4 = full
U5 = full
U6 = full
U7 = full
U8 = full
D1 = full
D2 = full
D4 = full
D6 = full
S1 = full
S2 = full
S9 = full
S11 = partial
M2 = full
M3 = full
M4 = full

[scheme fp5]
name = FP5
category = fingerprinting
notes = DNS resolver
U1 = full
U2 = full
U3 = full
U4 = full
U5 = full
U6 = full
U7 = full
U8 = full
D1 = full
D2 = full
D4 = full
D5 = partial
D6 = full
S1 = partial
S2 = partial
S9 = full
S11 = partial
M2 = full
M3 = partial

[scheme fp6]
name = FP6
category = fingerprinting
notes = Protocol-based fingerprinting
U1 = full
U2 = full
U3 = full
U4 = full
U5 = full
U6 = full
U7 = full
U8 = full
D1 = full
D2 = full
D4 = full
D5 = partial
D6 = full
S1 = partial
S2 = partial
S9 = full
S11 = partial
M2 = full

[scheme otp1]
name = OTP1
category = otp
notes = OTP mobile app
U1 = full
U2 = full
U3 = partial
U5 = full
U7 = full
U9 = full
U10 = full
D1 = partial
D2 = full
D4 = full
D5 = full
D6 = full
S1 = full
S2 = full
S3 = full
S4 = full
S6 = full
S7 = full
S9 = full
S10 = full
S11 = full
M1 = full

[scheme otp2]
name = OTP2
category = otp
notes = OTP USB token
U1 = full
U2 = full
U5 = full
U7 = full
U9 = full
U10 = full
D1 = partial
D4 = partial
D5 = full
D6 = full
S1 = full
S2 = full
S3 = full
S4 = full
S5 = full
S6 = full
S7 = full
S9 = full
S10 = full
S11 = full
M1 = full

[scheme otp3]
name = OTP3
category = otp
notes = SMS OTP
U1 = full
U2 = full
U3 = partial
U5 = full
U7 = full
U8 = partial
U9 = full
U10 = full
D1 = partial
D4 = full
D5 = full
D6 = full
S1 = full
S2 = partial
S3 = full
S4 = full
S6 = full
S7 = full
S9 = full
S10 = full
M1 = full
M2 = full
M3 = partial

[scheme otp4]
name = OTP4
category = otp
notes = E-mail OTP
U1 = full
U2 = full
U3 = full
U5 = full
U7 = full
U8 = full
U9 = full
U10 = full
D1 = partial
D2 = full
D4 = full
D5 = full
D6 = full
S1 = full
S2 = full
S3 = full
S4 = full
S6 = full
S7 = full
S8 = full
S9 = full
S10 = full
S11 = partial
M1 = full
M2 = full
M3 = partial

[scheme puf1]
name = PUF1
category = puf
notes = Strong PUF
U1 = full
U2 = full
U4 = full
U5 = full
U6 = full
U7 = full
U9 = full
U10 = full
D1 = full
S1 = full
S2 = full
S3 = full
S4 = full
S5 = full
S6 = full
S7 = full
S9 = full
S11 = full
M1 = full

[scheme puf2]
name = PUF2
category = puf
notes = Weak PUF
U1 = full
U2 = full
U4 = full
U5 = full
U6 = full
U7 = full
U9 = full
D1 = full
D6 = full
S1 = full
S2 = full
S3 = full
S4 = full
S6 = full
S7 = full
M1 = full
M2 = full
M3 = full

[scheme sound_proof]
name = Sound-Proof
category = other
notes = Ambient-sound proximity check between phone and access device
U1 = full
U2 = partial
U3 = partial
U4 = full
U5 = full
U6 = full
U7 = full
U9 = partial
U10 = full
D1 = full
D2 = full
D4 = full
D6 = full
S1 = partial
S3 = full
S4 = full
S6 = full
S7 = full
S9 = full
S11 = full
M1 = partial
M2 = full
M3 = full

[combined l1_pw]
parts = l1,pw

[combined l2_pw]
parts = l2,pw

[combined l3_pw]
parts = l3,pw

[combined l4_pw]
parts = l4,pw

[combined fp1_pw]
parts = fp1,pw

[combined fp2_pw]
parts = fp2,pw

[combined fp3_pw]
parts = fp3,pw

[combined fp4_pw]
parts = fp4,pw

[combined fp5_pw]
parts = fp5,pw

[combined fp6_pw]
parts = fp6,pw

[combined puf1_pw]
parts = puf1,pw

[combined puf2_pw]
parts = puf2,pw

[combined sound_proof_pw]
parts = sound_proof,pw

[expect pw]
vsegment = V1
hsegment = none
x = 0
y = 1

[expect l1]
vsegment = V1
hsegment = none
x = 0
y = 1

[expect l2]
vsegment = V1
hsegment = H2
x = 8
y = 1

[expect l3]
vsegment = V1
hsegment = H2
x = 10
y = 1

[expect l4]
vsegment = V1
hsegment = H3
x = 16
y = 1

[expect fp1]
vsegment = V1
hsegment = none

[expect fp2]
vsegment = V1
hsegment = H2
x = 10
y = 4

[expect fp3]
vsegment = V1
hsegment = none
x = 0
y = 1

[expect fp4]
vsegment = V1
hsegment = H3
x = 16
y = 1

[expect fp5]
vsegment = V1
hsegment = H2
x = 8
y = 1

[expect fp6]
vsegment = V1
hsegment = H1
errata = figure drawn at (4,4); benefit-derived placement is (4,1)

[expect otp1]
vsegment = V2
hsegment = none
errata = figure drawn at y=10.4; benefit-derived y is 11.2

[expect otp2]
vsegment = V3
hsegment = none
x = 0
y = 16

[expect otp3]
vsegment = V2
hsegment = H2
errata = figure drawn at y=10.4; benefit-derived y is 11.2

[expect otp4]
vsegment = V2
hsegment = H2
errata = figure drawn at y=10.4; benefit-derived y is 11.2

[expect puf1]
vsegment = V3
hsegment = none
x = 0
y = 16

[expect puf2]
vsegment = V2
hsegment = H2
errata = figure drawn at y=9.2; benefit-derived y is 10

[expect sound_proof]
vsegment = V2
hsegment = H2
x = 10
y = 10.4
)CAT";

}  // namespace

std::string_view reference_catalog_text() { return kReferenceCatalog; }

const Catalog& reference_catalog() {
  static const Catalog catalog = parse_catalog(kReferenceCatalog, "<builtin>");
  return catalog;
}

}  // namespace uds
