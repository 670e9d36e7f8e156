#include "gss/blocks.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace gss {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t pow_saturated(std::uint64_t q, int k, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (int i = 0; i < k; ++i) {
        if (v > cap / q) return cap + 1;
        v *= q;
    }
    return v;
}

std::uint64_t binom_saturated(int n, int w, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (int i = 0; i < w; ++i) {
        if (v > cap) return cap + 1;
        v = v * static_cast<std::uint64_t>(n - i) / (i + 1);
    }
    return v;
}

bool next_combination(std::vector<int>& c, int n) {
    const int w = static_cast<int>(c.size());
    for (int i = w - 1; i >= 0; --i) {
        if (c[i] < n - w + i) {
            ++c[i];
            for (int j = i + 1; j < w; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

int block_weight_row(const Mat& M, int i, int r) {
    int w = 0;
    for (int b = 0; b * r < M.cols; ++b) {
        for (int s = 0; s < r; ++s)
            if (M.at(i, b * r + s)) {
                ++w;
                break;
            }
    }
    return w;
}

int exhaustive_f2_blocks(const Mat& G, int r) {
    const int k = G.rows, nb = G.cols / r, words = (G.cols + 63) / 64;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(k) * words, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < G.cols; ++j)
            if (G.at(i, j))
                rows[static_cast<std::size_t>(i) * words + (j >> 6)] |= 1ull << (j & 63);
    std::vector<std::uint64_t> cw(words, 0);
    int best = nb + 1;
    const std::uint64_t total = 1ull << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        int j = std::countr_zero(i);
        const std::uint64_t* row = rows.data() + static_cast<std::size_t>(j) * words;
        for (int t = 0; t < words; ++t) cw[t] ^= row[t];
        int w = 0;
        for (int b = 0; b < nb; ++b) {
            for (int s = 0; s < r; ++s) {
                int c = b * r + s;
                if (cw[c >> 6] >> (c & 63) & 1) {
                    ++w;
                    break;
                }
            }
        }
        if (w < best) best = w;
    }
    return best;
}

int exhaustive_generic_blocks(const Mat& G, int r) {
    const Field& F = G.F;
    const int k = G.rows, n = G.cols, nb = n / r;
    int best = nb + 1;
    std::vector<fe> cur(n, 0);
    auto rec = [&](auto&& self, int i, bool nonzero) -> void {
        if (i == k) {
            if (!nonzero) return;
            int w = 0;
            for (int b = 0; b < nb; ++b)
                for (int s = 0; s < r; ++s)
                    if (cur[b * r + s]) {
                        ++w;
                        break;
                    }
            if (w < best) best = w;
            return;
        }
        self(self, i + 1, nonzero);
        std::vector<fe> saved = cur;
        for (fe c = 1; c < F.size(); ++c) {
            for (int j = 0; j < n; ++j)
                cur[j] = F.add(saved[j], F.mul(c, G.at(i, j)));
            self(self, i + 1, true);
        }
        cur = saved;
    };
    rec(rec, 0, false);
    return best;
}

struct SupportSearchResult {
    int found = -1;
    int excluded_below;
};

// Same idea as the plain-metric search, over block supports: a codeword
// confined to w blocks exists iff dropping those blocks' columns drops the
// rank of G below k.
SupportSearchResult support_search_blocks(const BlockCode& C, int wmax,
                                          Clock::time_point deadline,
                                          std::uint64_t per_level_cap) {
    const int nb = C.nblocks, k = C.G.rows, r = C.r;
    SupportSearchResult res;
    res.excluded_below = 1;
    for (int w = 1; w <= std::min(wmax, nb); ++w) {
        if (binom_saturated(nb, w, per_level_cap) > per_level_cap) return res;
        std::vector<int> comb(w);
        for (int i = 0; i < w; ++i) comb[i] = i;
        do {
            std::vector<char> in_set(nb, 0);
            for (int c : comb) in_set[c] = 1;
            std::vector<int> complement;
            complement.reserve((nb - w) * r);
            for (int b = 0; b < nb; ++b)
                if (!in_set[b])
                    for (int s = 0; s < r; ++s) complement.push_back(b * r + s);
            if (rank(select_columns(C.G, complement)) < k) {
                res.found = w;
                return res;
            }
            if (Clock::now() > deadline) return res;
        } while (next_combination(comb, nb));
        res.excluded_below = w + 1;
    }
    return res;
}

int randomized_upper_bound_blocks(const BlockCode& C, Clock::time_point deadline,
                                  std::uint64_t seed) {
    Rng rng(seed);
    const int nb = C.nblocks, r = C.r;
    int best = nb;
    do {
        std::vector<int> bperm = rng.permutation(nb);
        std::vector<int> cols;
        cols.reserve(nb * r);
        for (int b : bperm)
            for (int s = 0; s < r; ++s) cols.push_back(b * r + s);
        Mat Gp = select_columns(C.G, cols);
        RrefResult rr = rref(Gp);
        for (int i = 0; i < rr.rank; ++i) {
            int w = block_weight_row(rr.R, i, r);
            if (w > 0 && w < best) best = w;
        }
        const Field& F = C.G.F;
        for (int i = 0; i < rr.rank; ++i)
            for (int j = i + 1; j < rr.rank; ++j) {
                int w = 0;
                for (int b = 0; b < nb; ++b) {
                    for (int s = 0; s < r; ++s) {
                        int c = b * r + s;
                        if (F.add(rr.R.at(i, c), rr.R.at(j, c))) {
                            ++w;
                            break;
                        }
                    }
                }
                if (w > 0 && w < best) best = w;
            }
    } while (Clock::now() < deadline);
    return best;
}

} // namespace

std::pair<long long, long long> BlockCode::pseudo_dim() const {
    long long num = kq(), den = r;
    long long g = std::gcd(num, den);
    if (g == 0) g = 1;
    return {num / g, den / g};
}

BlockCode make_block_code(Mat G, int r) {
    if (r <= 0 || G.cols % r != 0)
        throw std::invalid_argument("column count is not a multiple of the block size");
    int nblocks = G.cols / r;
    RrefResult rr = rref(G);
    Mat R = nonzero_rows(rr.R);
    R.F = G.F;
    R.cols = G.cols;
    return {std::move(R), r, nblocks};
}

BlockCode make_block_code_exact(Mat G, int r) {
    if (r <= 0 || G.cols % r != 0)
        throw std::invalid_argument("column count is not a multiple of the block size");
    if (rank(G) != G.rows)
        throw std::invalid_argument("generator is rank-deficient");
    int nblocks = G.cols / r;
    return {std::move(G), r, nblocks};
}

BlockCode q_ary_image(const LinearCode& C) {
    const Tower& tw = *C.G.F.tw;
    if (C.G.F.lv != Level::Top)
        throw std::invalid_argument("expansion needs a code over the extension field");
    const int m = tw.m(), k = C.k(), n = C.n();
    Mat img(tw.mid(), k * m, n * m);
    for (int i = 0; i < k; ++i)
        for (int s = 0; s < m; ++s) {
            fe b = tw.basis()[s];
            for (int j = 0; j < n; ++j) {
                std::vector<fe> coords = tw.phi(tw.top().mul(b, C.G.at(i, j)));
                for (int t = 0; t < m; ++t) img.at(i * m + s, j * m + t) = coords[t];
            }
        }
    return make_block_code_exact(std::move(img), m);
}

int block_weight(const std::vector<fe>& word, int r) {
    if (r <= 0 || word.size() % r != 0)
        throw std::invalid_argument("word length is not a multiple of the block size");
    int w = 0;
    for (std::size_t b = 0; b * r < word.size(); ++b) {
        for (int s = 0; s < r; ++s)
            if (word[b * r + s]) {
                ++w;
                break;
            }
    }
    return w;
}

DistanceReport block_min_distance(const BlockCode& C, const DistanceBudget& budget) {
    if (C.kq() == 0)
        throw std::invalid_argument("the zero code has no minimum distance");
    const std::uint64_t q = C.G.F.size();
    const std::uint64_t count = pow_saturated(q, C.kq(), budget.max_enumeration);
    if (count <= budget.max_enumeration) {
        int d = q == 2 ? exhaustive_f2_blocks(C.G, C.r) : exhaustive_generic_blocks(C.G, C.r);
        return {d, DistanceKind::Exact, d, "exhaustive enumeration"};
    }
    auto deadline = Clock::now() + std::chrono::milliseconds(budget.time_ms);
    SupportSearchResult ss =
        support_search_blocks(C, budget.support_weight_max, deadline, 1u << 21);
    if (ss.found >= 0)
        return {ss.found, DistanceKind::Exact, ss.found, "support search"};
    int lower = ss.excluded_below;
    if (Clock::now() >= deadline)
        return {lower, DistanceKind::LowerBound, lower, "support search (budget exhausted)"};
    int ub = randomized_upper_bound_blocks(C, deadline, budget.seed);
    return {ub, DistanceKind::UpperBound, lower,
            "randomized information-set search (non-exhaustive upper bound)"};
}

BlockCode block_dual(const BlockCode& C) {
    return make_block_code(right_kernel(C.G), C.r);
}

MonomialIsometry identity_isometry(Field F, int nblocks, int r) {
    MonomialIsometry mon;
    mon.perm.resize(nblocks);
    std::iota(mon.perm.begin(), mon.perm.end(), 0);
    mon.f.assign(nblocks, Mat::identity(F, r));
    return mon;
}

MonomialIsometry random_isometry(Field F, int nblocks, int r, Rng& rng) {
    MonomialIsometry mon;
    mon.perm = rng.permutation(nblocks);
    mon.f.reserve(nblocks);
    for (int i = 0; i < nblocks; ++i) {
        Mat M(F, r, r);
        do {
            for (fe& x : M.a) x = rng.elem(F);
        } while (rank(M) < r);
        mon.f.push_back(std::move(M));
    }
    return mon;
}

MonomialIsometry inverse_isometry(const MonomialIsometry& mon) {
    const int nb = static_cast<int>(mon.perm.size());
    MonomialIsometry inv;
    inv.perm.resize(nb);
    inv.f.resize(nb);
    for (int i = 0; i < nb; ++i) {
        inv.perm[mon.perm[i]] = i;
        // the block landing at position perm[i] must be mapped back by f_i^{-1}
        inv.f[mon.perm[i]] = invert(mon.f[i]);
    }
    return inv;
}

std::vector<fe> apply_isometry_word(const MonomialIsometry& mon,
                                    const std::vector<fe>& word, int r) {
    const int nb = static_cast<int>(mon.perm.size());
    if (static_cast<int>(word.size()) != nb * r)
        throw std::invalid_argument("word length does not match the isometry");
    std::vector<fe> out(word.size(), 0);
    for (int i = 0; i < nb; ++i) {
        std::vector<fe> x(word.begin() + i * r, word.begin() + (i + 1) * r);
        std::vector<fe> z = mul_row(x, mon.f[i]);
        for (int s = 0; s < r; ++s) out[mon.perm[i] * r + s] = z[s];
    }
    return out;
}

BlockCode apply_isometry(const BlockCode& C, const MonomialIsometry& mon) {
    if (static_cast<int>(mon.perm.size()) != C.nblocks)
        throw std::invalid_argument("isometry size does not match the code");
    Mat G(C.G.F, C.G.rows, C.G.cols);
    for (int i = 0; i < C.G.rows; ++i) {
        std::vector<fe> row(C.G.cols);
        for (int j = 0; j < C.G.cols; ++j) row[j] = C.G.at(i, j);
        std::vector<fe> out = apply_isometry_word(mon, row, C.r);
        for (int j = 0; j < C.G.cols; ++j) G.at(i, j) = out[j];
    }
    return make_block_code(std::move(G), C.r);
}

MonomialIsometry adjoint_isometry(const MonomialIsometry& mon) {
    const int nb = static_cast<int>(mon.perm.size());
    for (int i = 0; i < nb; ++i)
        if (mon.perm[i] != i)
            throw std::invalid_argument("adjoint is defined for diagonal isometries only");
    MonomialIsometry adj;
    adj.perm = mon.perm;
    adj.f.reserve(nb);
    for (const Mat& fi : mon.f) adj.f.push_back(transpose(invert(fi)));
    return adj;
}

} // namespace gss
