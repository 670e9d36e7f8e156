#pragma once

#include "gss/linalg.hpp"

#include <cstdint>

namespace gss::refdata {

// Reference data for the worked [7,6] / [7,5] examples over GF(8) and their
// derived codes, plus frozen numeric constants used by the acceptance tests.
// All matrices are expressed over the given tower (p=2, e=1, m=3 expected
// unless stated otherwise).

Mat rs7_systematic(const Tower& tw);   // [7,6]: I_6 | (alpha, ..., alpha^6)
Mat image18(const Tower& tw);          // its 18x21 binary expansion
Mat image_dual3(const Tower& tw);      // 3x21 parity of that expansion

std::vector<int> tuple_a();            // (2,3,3,2,2,3,3) -> [7,4,2]
std::vector<int> tuple_b();            // (1,3,1,2,3,1,3) -> [7,4,3]
Mat shortened_a(const Tower& tw);      // reference generator for tuple_a
Mat shortened_b(const Tower& tw);      // reference generator for tuple_b

Mat parity21(const Tower& tw);         // 6x21 parity of the [7,5] expansion

// The subspace family (1,alpha), (1,alpha^2), (alpha,alpha^2) in the order
// V1 V2 V1 V3 V1 V2 V1, and the parity columns it drops (1-based).
std::vector<Mat> family_bases(const Tower& tw);
std::vector<int> family_dropped_columns();

// Reference 8x14 generator as published for the family above.  It is
// defective: five of its rows fail the very parity check it accompanies, so
// no generator of the constructed code spans its row space; see
// derived_block_generator for the actual kernel.
Mat expected_block_generator(const Tower& tw);
Mat derived_block_generator(const Tower& tw);

Mat hamming7(const Tower& tw);         // [7,4,3] over the base field

std::vector<fe> rs7_dual_vector();     // (alpha, ..., alpha^6, 1) spans the [7,6] dual

struct FrozenWorkfactor {
    int n, k, t;
    int floor_log2;
};

// Exact floors of log2(C(n,k)/C(n-t,k)), frozen from a big-integer oracle.
inline constexpr FrozenWorkfactor kWorkfactors[] = {
    {4096, 3556, 45, 133},
    {700, 520, 60, 129},
    {512, 330, 81, 141},
};

// k(n-k) key sizes in bits.
inline constexpr std::uint64_t kKeyBitsQuaternary = 1497600; // 1040 x 360 x 4
inline constexpr std::uint64_t kKeyBitsBinaryLarge = 3846204; // 2638 x 1458 x 1
inline constexpr std::uint64_t kKeyBitsGoppa = 1920240;       // 3556 x 540 x 1

} // namespace gss::refdata
