#pragma once

#include "gss/gss.hpp"

namespace gss {

// log2 of the information-set counting workfactor C(n,k) / C(n-t,k),
// from exact big-integer binomials.
double workfactor_log2(int n, int k, int t);

// Bits needed for the redundant part of a systematic k x n generator.
std::uint64_t keysize_systematic(std::uint64_t k_q, std::uint64_t n_q,
                                 int bits_per_symbol);

// McEliece-style demonstrator around gss_w.  The public generator is the
// reduced row echelon generator of the block-permuted subspace subcode: the
// identity sits on the pivot columns, so the message can be read off a clean
// codeword directly.
struct PublicKey {
    const Tower* tw = nullptr;
    Mat G; // k_q x (n*r) over GF(q), reduced row echelon form
    int n = 0, r = 0, t = 0;
    std::vector<int> pivots;
};

struct SecretKey {
    GrsSpec parent;
    SubspaceFamily W;
    std::vector<int> perm; // secret block i is public block perm[i]
};

struct KeyPair {
    PublicKey pub;
    SecretKey sec;
};

KeyPair keygen(const GrsSpec& parent, int r, std::uint64_t seed);

// message length = pub.G.rows; adds a uniformly random block error of the
// given weight (defaults to the key's t when t < 0).
std::vector<fe> encrypt(const PublicKey& pub, const std::vector<fe>& message,
                        Rng& rng, int t = -1);

struct DecryptResult {
    bool ok = false;
    std::vector<fe> message;
    std::string reason;
};

DecryptResult decrypt(const SecretKey& sec, const PublicKey& pub,
                      const std::vector<fe>& ciphertext);

} // namespace gss
