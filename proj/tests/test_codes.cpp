#include "doctest.h"

#include "gss/codes.hpp"
#include "gss/refdata.hpp"
#include "gss/rng.hpp"
#include "gss/rs.hpp"

#include <set>

using namespace gss;

namespace {

LinearCode random_code(Field F, int n, int k, Rng& rng) {
    for (;;) {
        Mat G(F, k, n);
        for (fe& v : G.a) v = rng.elem(F);
        LinearCode C = make_code(std::move(G));
        if (C.k() == k) return C;
    }
}

} // namespace

TEST_SUITE("codes") {

TEST_CASE("make_code canonicalizes") {
    Tower tw(2, 1, 1);
    Field F = tw.mid();
    Mat G = Mat::from_rows(F, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}); // rank 2
    LinearCode C = make_code(G);
    CHECK(C.k() == 2);
    CHECK(row_space_equal(C.G, G));
    CHECK_THROWS(make_code_exact(G));
    CHECK(make_code_exact(C.G).k() == 2);
}

TEST_CASE("hamming code distances") {
    Tower tw(2, 1, 3);
    LinearCode H = make_code_exact(refdata::hamming7(tw));
    DistanceReport rep = min_distance(H);
    CHECK(rep.kind == DistanceKind::Exact);
    CHECK(rep.d == 3);
    LinearCode S = dual(H); // simplex
    CHECK(S.k() == 3);
    DistanceReport rs_ = min_distance(S);
    CHECK(rs_.d == 4);
    CHECK(mul(H.G, transpose(S.G)).is_zero());
    CHECK(row_space_equal(dual(S).G, H.G));
}

TEST_CASE("dual dimensions over gf8") {
    Tower tw(2, 1, 3);
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        LinearCode C = random_code(tw.top(), 9, 4, rng);
        LinearCode D = dual(C);
        CHECK(D.k() == 5);
        CHECK(mul(C.G, transpose(D.G)).is_zero());
        CHECK(row_space_equal(dual(D).G, C.G));
    }
}

TEST_CASE("shorten and puncture") {
    Tower tw(2, 1, 3);
    LinearCode H = make_code_exact(refdata::hamming7(tw));
    std::vector<int> I{0, 5};
    LinearCode S = shorten(H, I);
    LinearCode P = puncture(H, I);
    CHECK(S.n() == 5);
    CHECK(P.n() == 5);
    CHECK(S.k() == 2);   // two independent coordinates pinned to zero
    CHECK(P.k() == 4);   // no weight-<=2 words, so no dimension loss
    // shortened words are punctured words
    CHECK(rank(vstack(S.G, P.G)) == P.k());
    CHECK(puncture(H, {}).k() == 4);
    CHECK(row_space_equal(puncture(H, {}).G, H.G));
}

TEST_CASE("shorten-puncture duality") {
    Tower tw(2, 1, 2);
    Rng rng(37);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + static_cast<int>(rng.below(6));
        int k = 1 + static_cast<int>(rng.below(n - 1));
        LinearCode C = random_code(tw.top(), n, k, rng);
        std::vector<int> I = rng.subset(n, 1 + static_cast<int>(rng.below(n - 1)));
        CHECK(row_space_equal(dual(puncture(C, I)).G, shorten(dual(C), I).G));
    }
}

TEST_CASE("distance strategy ladder") {
    Tower tw(2, 1, 3);
    LinearCode H = make_code_exact(refdata::hamming7(tw));

    DistanceBudget enumerate; // default: full enumeration fits
    DistanceReport r1 = min_distance(H, enumerate);
    CHECK(r1.kind == DistanceKind::Exact);
    CHECK(r1.d == 3);
    CHECK(r1.method == "exhaustive enumeration");

    DistanceBudget support;
    support.max_enumeration = 1; // force the support search
    DistanceReport r2 = min_distance(H, support);
    CHECK(r2.kind == DistanceKind::Exact);
    CHECK(r2.d == 3);

    DistanceBudget randomized;
    randomized.max_enumeration = 1;
    randomized.support_weight_max = 0; // force the randomized fallback
    randomized.time_ms = 2000;
    DistanceReport r3 = min_distance(H, randomized);
    CHECK(r3.kind == DistanceKind::UpperBound);
    CHECK(r3.d >= 3);
    CHECK(r3.d <= 7);
}

TEST_CASE("distance edge cases") {
    Tower tw(2, 1, 2);
    Field F = tw.top();
    // repetition code
    Mat rep = Mat::from_rows(F, {{1, 1, 1, 1, 1}});
    DistanceReport r = min_distance(make_code_exact(rep));
    CHECK(r.d == 5);
    // full space
    LinearCode full = make_code(Mat::identity(F, 4));
    CHECK(min_distance(full).d == 1);
}

TEST_CASE("subfield subcode of the [7,6] code is a hamming code") {
    Tower tw(2, 1, 3);
    LinearCode C = rs_generator(make_rs(tw, 7, 6));
    LinearCode sub = subfield_subcode(C);
    CHECK(sub.G.F.size() == 2);
    CHECK(sub.k() == 4);
    DistanceReport rep = min_distance(sub);
    CHECK(rep.kind == DistanceKind::Exact);
    CHECK(rep.d == 3);
    // every row satisfies the parent dual relation sum_j c_j y_j = 0
    std::vector<fe> y = refdata::rs7_dual_vector();
    for (int i = 0; i < sub.k(); ++i) {
        fe acc = 0;
        for (int j = 0; j < 7; ++j)
            acc ^= tw.top().mul(sub.G.at(i, j), y[static_cast<std::size_t>(j)]);
        CHECK(acc == 0);
    }
    // the dual's columns run through every nonzero binary triple once, which
    // pins the code as a (possibly relabeled) hamming code
    LinearCode D = dual(sub);
    REQUIRE(D.k() == 3);
    std::set<unsigned> cols;
    for (int j = 0; j < 7; ++j) {
        unsigned col = 0;
        for (int i = 0; i < 3; ++i) col |= static_cast<unsigned>(D.G.at(i, j)) << i;
        CHECK(col != 0);
        cols.insert(col);
    }
    CHECK(cols.size() == 7);
}

TEST_CASE("subfield subcode sits inside the trace code") {
    Tower tw(2, 1, 3);
    Rng rng(41);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 3 + static_cast<int>(rng.below(7));
        int k = 1 + static_cast<int>(rng.below(n));
        LinearCode C = random_code(tw.top(), n, k, rng);
        LinearCode sub = subfield_subcode(C);
        LinearCode tr = trace_code(C);
        CHECK(rank(vstack(sub.G, tr.G)) == tr.k());
    }
}

TEST_CASE("delsarte duality") {
    Tower tw(2, 1, 3);
    Rng rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng.below(9));
        int k = 1 + static_cast<int>(rng.below(n));
        LinearCode C = random_code(tw.top(), n, k, rng);
        CHECK(row_space_equal(dual(subfield_subcode(C)).G,
                              trace_code(dual(C)).G));
    }
}

TEST_CASE("hamming weight helper") {
    CHECK(hamming_weight({0, 0, 0}) == 0);
    CHECK(hamming_weight({1, 0, 7, 0, 2}) == 3);
}

} // TEST_SUITE
