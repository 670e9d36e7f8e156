#pragma once

#include "gss/codes.hpp"

#include <string>

namespace gss {

// A generalized Reed-Solomon code over the tower's extension field:
// codewords (v_0 f(a_0), ..., v_{n-1} f(a_{n-1})) for deg f < k.
struct GrsSpec {
    const Tower* tw = nullptr;
    std::vector<fe> support;
    std::vector<fe> mult;
    int k = 0;
    bool extended = false; // support covers the whole field, zero included

    int n() const { return static_cast<int>(support.size()); }
    int d() const { return n() - k + 1; } // MDS
    int t() const { return (d() - 1) / 2; }
    Field field() const { return tw->top(); }
};

GrsSpec make_rs(const Tower& tw, int n, int k); // support 1, alpha, alpha^2, ...
GrsSpec make_extended_rs(const Tower& tw, int k); // support = every field element
GrsSpec make_grs(const Tower& tw, std::vector<fe> support, std::vector<fe> mult, int k);

// Raw k x n evaluation generator, rows v_j * a_j^i (not canonicalized).
LinearCode rs_generator(const GrsSpec& spec);

std::vector<fe> encode(const GrsSpec& spec, const std::vector<fe>& message);

// y_j such that (y_j a_j^s)_{s < n-k} is a parity check for the code:
// y_j = (v_j * prod_{l != j} (a_j - a_l))^{-1}.
std::vector<fe> dual_multipliers(const GrsSpec& spec);

struct DecodeResult {
    bool ok = false;
    std::vector<fe> codeword;
    std::vector<int> error_positions; // ascending
    std::vector<fe> error_values;
    std::string reason; // set when !ok
};

// Bounded-distance decoding up to t = floor((n-k)/2) errors; never returns a
// word farther than t from the input.
DecodeResult decode(const GrsSpec& spec, const std::vector<fe>& word);

// Subfield subcode over GF(q).
LinearCode alternant_code(const GrsSpec& spec);

} // namespace gss
