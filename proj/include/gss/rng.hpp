#pragma once

#include "gss/galois.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace gss {

// Counter-based deterministic generator (SplitMix64).  Every random choice in
// the library flows from one of these so runs are reproducible from a single
// seed, with no ambient entropy.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), unbiased
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t lim = ~0ull - ~0ull % n;
        std::uint64_t v;
        do { v = next(); } while (v >= lim);
        return v % n;
    }

    bool coin() { return next() & 1; }

    fe elem(const Field& F) { return static_cast<fe>(below(F.size())); }
    fe nonzero(const Field& F) { return static_cast<fe>(1 + below(F.size() - 1)); }

    std::vector<int> permutation(int n) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        for (int i = n - 1; i > 0; --i)
            std::swap(p[i], p[static_cast<int>(below(i + 1))]);
        return p;
    }

    // k distinct values from [0, n), ascending
    std::vector<int> subset(int n, int k) {
        std::vector<int> p = permutation(n);
        p.resize(k);
        std::sort(p.begin(), p.end());
        return p;
    }

private:
    std::uint64_t state_;
};

} // namespace gss
