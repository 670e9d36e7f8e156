#pragma once

#include "gss/linalg.hpp"

#include <optional>
#include <string>

namespace gss {

// A linear code presented by a full-row-rank generator matrix.
struct LinearCode {
    Mat G;
    std::optional<int> d; // cached exact minimum distance, when known

    int n() const { return G.cols; }
    int k() const { return G.rows; }
};

// Reduces G to a canonical full-rank generator (RREF, zero rows dropped).
LinearCode make_code(Mat G);
// Keeps G exactly as given; throws if it is not full row rank.
LinearCode make_code_exact(Mat G);

LinearCode dual(const LinearCode& C);

// Codewords vanishing on I, with I deleted.  0-based positions.
LinearCode shorten(const LinearCode& C, const std::vector<int>& I);
// All codewords with positions I deleted.  Dimension is recomputed.
LinearCode puncture(const LinearCode& C, const std::vector<int>& I);

// For C over GF(q^m): the GF(q)-rational codewords, as a code over GF(q).
// Built from the expanded parity-check matrix of the dual.
LinearCode subfield_subcode(const LinearCode& C);

// Coordinate-wise trace image of C, as a code over GF(q).
LinearCode trace_code(const LinearCode& C);

enum class DistanceKind { Exact, LowerBound, UpperBound };

struct DistanceReport {
    int d = 0;
    DistanceKind kind = DistanceKind::Exact;
    int verified_lower = 0;  // all weights below this are excluded
    std::string method;
};

struct DistanceBudget {
    std::uint64_t max_enumeration = 1ull << 24; // full enumeration cap on q^k
    int support_weight_max = 14;                // support-search weight cap
    long long time_ms = 60000;                  // budget for searches
    std::uint64_t seed = 0;                     // randomized-search seed
    int threads = 1;                            // accepted as a hint
};

// Strategy: full enumeration when q^k fits the cap; otherwise support search
// by ascending weight; otherwise a randomized information-set search that
// reports a (flagged) non-exhaustive upper bound.
DistanceReport min_distance(const LinearCode& C, const DistanceBudget& budget = {});

int hamming_weight(const std::vector<fe>& v);

} // namespace gss
