#include "gss/crypto.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace gss {

namespace {

// Just enough unsigned bignum for exact binomial coefficients.
struct BigUint {
    std::vector<std::uint32_t> limbs{0}; // little-endian

    static BigUint one() { return BigUint{{1}}; }

    void trim() {
        while (limbs.size() > 1 && limbs.back() == 0) limbs.pop_back();
    }

    void mul_small(std::uint32_t x) {
        std::uint64_t carry = 0;
        for (std::uint32_t& l : limbs) {
            std::uint64_t v = static_cast<std::uint64_t>(l) * x + carry;
            l = static_cast<std::uint32_t>(v);
            carry = v >> 32;
        }
        while (carry) {
            limbs.push_back(static_cast<std::uint32_t>(carry));
            carry >>= 32;
        }
    }

    void div_small_exact(std::uint32_t x) {
        std::uint64_t rem = 0;
        for (std::size_t i = limbs.size(); i-- > 0;) {
            std::uint64_t v = (rem << 32) | limbs[i];
            limbs[i] = static_cast<std::uint32_t>(v / x);
            rem = v % x;
        }
        trim();
    }

    int bit_length() const {
        int top = static_cast<int>(limbs.size()) - 1;
        if (limbs[top] == 0) return 0;
        return top * 32 + (32 - std::countl_zero(limbs[top]));
    }

    double log2() const {
        // mantissa from the top 64 bits; exactness is not needed here
        int bl = bit_length();
        if (bl == 0) throw std::invalid_argument("log2 of zero");
        double mant = 0;
        for (int b = bl - 1; b >= 0 && b >= bl - 64; --b) {
            int limb = b >> 5;
            if (limbs[limb] >> (b & 31) & 1) mant += std::ldexp(1.0, b - bl);
        }
        return (bl - 1) + std::log2(mant * 2.0);
    }
};

BigUint binomial(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("binomial out of range");
    if (k > n - k) k = n - k;
    BigUint c = BigUint::one();
    for (int i = 1; i <= k; ++i) {
        c.mul_small(static_cast<std::uint32_t>(n - k + i));
        c.div_small_exact(static_cast<std::uint32_t>(i)); // C(n-k+i, i) stays integral
    }
    return c;
}

} // namespace

double workfactor_log2(int n, int k, int t) {
    if (n <= 0 || k <= 0 || t < 0 || k > n - t)
        throw std::invalid_argument("need 0 < k <= n - t and t >= 0");
    if (t == 0) return 0.0;
    return binomial(n, k).log2() - binomial(n - t, k).log2();
}

std::uint64_t keysize_systematic(std::uint64_t k_q, std::uint64_t n_q,
                                 int bits_per_symbol) {
    if (k_q > n_q) throw std::invalid_argument("dimension exceeds length");
    return k_q * (n_q - k_q) * static_cast<std::uint64_t>(bits_per_symbol);
}

KeyPair keygen(const GrsSpec& parent, int r, std::uint64_t seed) {
    const Tower& tw = *parent.tw;
    if (r < 1 || r > tw.m())
        throw std::invalid_argument("subspace dimension must lie in 1..m");
    Rng rng(seed);
    const int n = parent.n();
    LinearCode C = rs_generator(parent);
    for (int attempt = 0; attempt < 16; ++attempt) {
        SubspaceFamily W = random_family(tw, n, r, rng);
        BlockCode sub = gss_w(C, W);
        if (sub.kq() == 0) continue; // degenerate draw; take the next one
        std::vector<int> perm = rng.permutation(n);
        Mat pubG(sub.G.F, sub.G.rows, sub.G.cols);
        for (int i = 0; i < n; ++i)
            for (int row = 0; row < sub.G.rows; ++row)
                for (int s = 0; s < r; ++s)
                    pubG.at(row, perm[i] * r + s) = sub.G.at(row, i * r + s);
        RrefResult rr = rref(pubG);
        Mat G = nonzero_rows(rr.R);
        G.F = pubG.F;
        G.cols = pubG.cols;
        KeyPair kp;
        kp.pub.tw = &tw;
        kp.pub.G = std::move(G);
        kp.pub.n = n;
        kp.pub.r = r;
        kp.pub.t = parent.t();
        kp.pub.pivots = rr.pivots;
        kp.sec.parent = parent;
        kp.sec.W = std::move(W);
        kp.sec.perm = std::move(perm);
        return kp;
    }
    throw std::runtime_error("could not draw a usable subspace family");
}

std::vector<fe> encrypt(const PublicKey& pub, const std::vector<fe>& message,
                        Rng& rng, int t) {
    if (static_cast<int>(message.size()) != pub.G.rows)
        throw std::invalid_argument("message length must equal the key dimension");
    if (t < 0) t = pub.t;
    if (t > pub.n) throw std::invalid_argument("error weight exceeds the length");
    const Field& F = pub.G.F;
    std::vector<fe> ct = mul_row(message, pub.G);
    std::vector<int> where = rng.subset(pub.n, t);
    for (int b : where) {
        bool nonzero = false;
        std::vector<fe> block(pub.r);
        while (!nonzero) {
            for (fe& x : block) {
                x = rng.elem(F);
                nonzero = nonzero || x != 0;
            }
        }
        for (int s = 0; s < pub.r; ++s)
            ct[b * pub.r + s] = F.add(ct[b * pub.r + s], block[s]);
    }
    return ct;
}

DecryptResult decrypt(const SecretKey& sec, const PublicKey& pub,
                      const std::vector<fe>& ciphertext) {
    DecryptResult res;
    const int n = pub.n, r = pub.r;
    if (static_cast<int>(ciphertext.size()) != n * r)
        throw std::invalid_argument("ciphertext length must be n*r");
    // back to the secret block order
    std::vector<fe> z(ciphertext.size());
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < r; ++s) z[i * r + s] = ciphertext[sec.perm[i] * r + s];
    GssDecodeResult gd = gss_decode(sec.parent, sec.W, z);
    if (!gd.ok) {
        res.reason = gd.outside_family ? "error weight beyond the correction radius"
                                       : gd.reason;
        return res;
    }
    // forward again and read the message at the pivot columns
    std::vector<fe> y(gd.word.size());
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < r; ++s) y[sec.perm[i] * r + s] = gd.word[i * r + s];
    res.message.resize(pub.G.rows);
    for (int row = 0; row < pub.G.rows; ++row) res.message[row] = y[pub.pivots[row]];
    res.ok = true;
    return res;
}

} // namespace gss
