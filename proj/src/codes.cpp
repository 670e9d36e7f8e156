#include "gss/codes.hpp"

#include "gss/rng.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

namespace gss {

namespace {

using Clock = std::chrono::steady_clock;

int weight_of_row(const Mat& M, int i) {
    int w = 0;
    for (int j = 0; j < M.cols; ++j)
        if (M.at(i, j)) ++w;
    return w;
}

// q^k, saturated so it can be compared against an enumeration cap
std::uint64_t pow_saturated(std::uint64_t q, int k, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (int i = 0; i < k; ++i) {
        if (v > cap / q) return cap + 1;
        v *= q;
    }
    return v;
}

int exhaustive_f2(const Mat& G) {
    const int k = G.rows, words = (G.cols + 63) / 64;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(k) * words, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < G.cols; ++j)
            if (G.at(i, j))
                rows[static_cast<std::size_t>(i) * words + (j >> 6)] |= 1ull << (j & 63);
    std::vector<std::uint64_t> cw(words, 0);
    int best = G.cols + 1;
    const std::uint64_t total = 1ull << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        int j = std::countr_zero(i); // Gray-code order: one row toggles per step
        const std::uint64_t* r = rows.data() + static_cast<std::size_t>(j) * words;
        int w = 0;
        for (int t = 0; t < words; ++t) {
            cw[t] ^= r[t];
            w += std::popcount(cw[t]);
        }
        if (w < best) best = w;
    }
    return best;
}

int exhaustive_generic(const Mat& G) {
    const Field& F = G.F;
    const int k = G.rows, n = G.cols;
    int best = n + 1;
    std::vector<fe> cur(n, 0);
    // depth-first over messages; row i is scaled by every field element
    auto rec = [&](auto&& self, int i, bool nonzero) -> void {
        if (i == k) {
            if (!nonzero) return;
            int w = 0;
            for (int j = 0; j < n; ++j)
                if (cur[j]) ++w;
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

std::uint64_t binom_saturated(int n, int w, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (int i = 0; i < w; ++i) {
        if (v > cap) return cap + 1;
        v = v * static_cast<std::uint64_t>(n - i) / (i + 1);
    }
    return v;
}

// Smallest w such that some nonzero codeword has support inside a w-set:
// rank of G restricted to the complement drops below k.
struct SupportSearchResult {
    int found = -1;      // exact distance when >= 0
    int excluded_below;  // every weight < excluded_below is ruled out
};

SupportSearchResult support_search(const Mat& G, int wmax, Clock::time_point deadline,
                                   std::uint64_t per_level_cap) {
    const int n = G.cols, k = G.rows;
    SupportSearchResult res;
    res.excluded_below = 1;
    for (int w = 1; w <= std::min(wmax, n); ++w) {
        if (binom_saturated(n, w, per_level_cap) > per_level_cap) return res;
        std::vector<int> comb(w);
        for (int i = 0; i < w; ++i) comb[i] = i;
        do {
            std::vector<char> in_set(n, 0);
            for (int c : comb) in_set[c] = 1;
            std::vector<int> complement;
            complement.reserve(n - w);
            for (int j = 0; j < n; ++j)
                if (!in_set[j]) complement.push_back(j);
            if (rank(select_columns(G, complement)) < k) {
                res.found = w;
                return res;
            }
            if (Clock::now() > deadline) return res;
        } while (next_combination(comb, n));
        res.excluded_below = w + 1;
    }
    return res;
}

int randomized_upper_bound(const Mat& G, Clock::time_point deadline, std::uint64_t seed) {
    Rng rng(seed);
    const int n = G.cols, k = G.rows;
    int best = n;
    do {
        Mat Gp = select_columns(G, rng.permutation(n));
        RrefResult rr = rref(Gp);
        for (int i = 0; i < rr.rank; ++i) {
            int w = weight_of_row(rr.R, i);
            if (w > 0 && w < best) best = w;
        }
        const Field& F = G.F;
        for (int i = 0; i < rr.rank; ++i)
            for (int j = i + 1; j < rr.rank; ++j) {
                int w = 0;
                for (int c = 0; c < n; ++c)
                    if (F.add(rr.R.at(i, c), rr.R.at(j, c))) ++w;
                if (w > 0 && w < best) best = w;
            }
    } while (Clock::now() < deadline);
    return best;
}

} // namespace

LinearCode make_code(Mat G) {
    RrefResult rr = rref(G);
    Mat R = nonzero_rows(rr.R);
    R.F = G.F;
    R.cols = G.cols;
    return {std::move(R), std::nullopt};
}

LinearCode make_code_exact(Mat G) {
    if (rank(G) != G.rows)
        throw std::invalid_argument("generator is rank-deficient");
    return {std::move(G), std::nullopt};
}

LinearCode dual(const LinearCode& C) {
    return make_code(right_kernel(C.G));
}

LinearCode shorten(const LinearCode& C, const std::vector<int>& I) {
    if (I.empty()) return make_code(C.G);
    std::vector<int> pos = I;
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    if (static_cast<int>(pos.size()) >= C.n())
        throw std::invalid_argument("cannot shorten away every position");
    for (int p : pos)
        if (p < 0 || p >= C.n()) throw std::invalid_argument("position out of range");
    // messages whose codeword vanishes on I
    Mat K = right_kernel(transpose(select_columns(C.G, pos)));
    return make_code(delete_columns(mul(K, C.G), pos));
}

LinearCode puncture(const LinearCode& C, const std::vector<int>& I) {
    if (I.empty()) return make_code(C.G);
    std::vector<int> pos = I;
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    if (static_cast<int>(pos.size()) >= C.n())
        throw std::invalid_argument("cannot puncture away every position");
    for (int p : pos)
        if (p < 0 || p >= C.n()) throw std::invalid_argument("position out of range");
    return make_code(delete_columns(C.G, pos));
}

LinearCode subfield_subcode(const LinearCode& C) {
    const Tower* tw = C.G.F.tw;
    if (C.G.F.lv == Level::Mid)
        return make_code(C.G);
    if (tw->m() == 1) {
        Mat G = C.G;
        G.F = tw->mid();
        return make_code(std::move(G));
    }
    const int n = C.n(), m = static_cast<int>(tw->m());
    Mat H = dual(C).G;
    Mat Hq(tw->mid(), H.rows * m, n);
    for (int i = 0; i < H.rows; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<fe> c = tw->phi(H.at(i, j));
            for (int s = 0; s < m; ++s) Hq.at(i * m + s, j) = c[s];
        }
    return make_code(right_kernel(Hq));
}

LinearCode trace_code(const LinearCode& C) {
    const Tower* tw = C.G.F.tw;
    if (C.G.F.lv == Level::Mid)
        return make_code(C.G);
    if (tw->m() == 1) {
        Mat G = C.G;
        G.F = tw->mid();
        return make_code(std::move(G));
    }
    const int n = C.n(), m = static_cast<int>(tw->m());
    Field top = tw->top();
    Mat T(tw->mid(), C.k() * m, n);
    for (int i = 0; i < C.k(); ++i)
        for (int s = 0; s < m; ++s)
            for (int j = 0; j < n; ++j)
                T.at(i * m + s, j) = tw->trace(top.mul(tw->basis()[s], C.G.at(i, j)));
    return make_code(std::move(T));
}

int hamming_weight(const std::vector<fe>& v) {
    int w = 0;
    for (fe x : v)
        if (x) ++w;
    return w;
}

DistanceReport min_distance(const LinearCode& C, const DistanceBudget& budget) {
    if (C.k() == 0)
        throw std::invalid_argument("the zero code has no minimum distance");
    const std::uint64_t q = C.G.F.size();
    const std::uint64_t count = pow_saturated(q, C.k(), budget.max_enumeration);
    if (count <= budget.max_enumeration) {
        int d = q == 2 ? exhaustive_f2(C.G) : exhaustive_generic(C.G);
        return {d, DistanceKind::Exact, d, "exhaustive enumeration"};
    }
    auto deadline = Clock::now() + std::chrono::milliseconds(budget.time_ms);
    SupportSearchResult ss =
        support_search(C.G, budget.support_weight_max, deadline, 1u << 21);
    if (ss.found >= 0)
        return {ss.found, DistanceKind::Exact, ss.found, "support search"};
    int lower = ss.excluded_below;
    if (Clock::now() >= deadline)
        return {lower, DistanceKind::LowerBound, lower, "support search (budget exhausted)"};
    int ub = randomized_upper_bound(C.G, deadline, budget.seed);
    return {ub, DistanceKind::UpperBound, lower,
            "randomized information-set search (non-exhaustive upper bound)"};
}

} // namespace gss
