#include "doctest.h"

#include "gss/gss.hpp"
#include "gss/refdata.hpp"
#include "gss/rng.hpp"

#include <numeric>

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

TEST_SUITE("gss") {

TEST_CASE("component selection reproduces the printed generators") {
    Tower tw(2, 1, 3);
    LinearCode C = make_code_exact(refdata::rs7_systematic(tw));
    LinearCode A = s_u(C, refdata::tuple_a());
    CHECK(A.n() == 7);
    CHECK(A.k() == 4);
    CHECK(row_space_equal(A.G, refdata::shortened_a(tw)));
    LinearCode B = s_u(C, refdata::tuple_b());
    CHECK(row_space_equal(B.G, refdata::shortened_b(tw)));
}

TEST_CASE("shortened selections sit inside punctured ones") {
    Tower tw(2, 1, 3);
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng.below(7));
        int k = 1 + static_cast<int>(rng.below(n));
        LinearCode C = random_code(tw.top(), n, k, rng);
        std::vector<int> u(static_cast<std::size_t>(n));
        for (int& v : u) v = 1 + static_cast<int>(rng.below(3));
        LinearCode S = s_u(C, u);
        LinearCode P = p_u(C, u);
        CHECK(S.n() == n);
        CHECK(P.n() == n);
        CHECK(rank(vstack(S.G, P.G)) == P.k());
    }
}

TEST_CASE("tuple validation") {
    Tower tw(2, 1, 3);
    LinearCode C = make_code_exact(refdata::rs7_systematic(tw));
    CHECK_THROWS(s_u(C, {1, 2, 3}));                   // wrong length
    CHECK_THROWS(s_u(C, {0, 1, 1, 1, 1, 1, 1}));       // below 1
    CHECK_THROWS(s_u(C, {4, 1, 1, 1, 1, 1, 1}));       // above m
}

TEST_CASE("kernel construction equals shortening") {
    Tower tw(2, 1, 3);
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng.below(7));
        int k = 1 + static_cast<int>(rng.below(n));
        LinearCode C = random_code(tw.top(), n, k, rng);
        std::vector<int> u(static_cast<std::size_t>(n));
        for (int& v : u) v = 1 + static_cast<int>(rng.below(3));
        CHECK(row_space_equal(gss_algorithm1(C, u), s_u(C, u).G));
    }
}

TEST_CASE("family builders") {
    Tower tw(2, 1, 3);
    SubspaceFamily T = family_from_tuple(tw, {2, 1, 3});
    CHECK(T.r == 1);
    CHECK(T.n() == 3);
    CHECK(T.bases[0].at(0, 1) == 1); // second basis vector
    CHECK(T.bases[2].at(0, 2) == 1);

    SubspaceFamily E = family_from_elements(tw, {5, 1});
    CHECK(E.bases[0].at(0, 0) == 1); // phi(5) = (1,0,1)
    CHECK(E.bases[0].at(0, 2) == 1);

    Mat V = Mat::from_rows(tw.mid(), {{1, 0, 0}, {0, 1, 0}});
    SubspaceFamily U = uniform_family(tw, 4, V);
    CHECK(U.n() == 4);
    CHECK(U.r == 2);

    Rng rng(7);
    SubspaceFamily R = random_family(tw, 5, 2, rng);
    for (const Mat& b : R.bases) CHECK(rank(b) == 2);

    CHECK_THROWS(family_from_elements(tw, {0, 1})); // zero spans nothing
    Mat bad = Mat::from_rows(tw.mid(), {{1, 0, 0}, {1, 0, 0}});
    CHECK_THROWS(make_family(tw, {bad}));
}

TEST_CASE("the isometry and element paths agree") {
    Tower tw(2, 1, 3);
    Rng rng(11);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 2 + static_cast<int>(rng.below(6));
        int k = 1 + static_cast<int>(rng.below(n));
        LinearCode C = random_code(tw.top(), n, k, rng);
        MonomialIsometry mon = random_isometry(tw.mid(), n, 3, rng);
        std::vector<fe> y(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            Mat finv = invert(mon.f[static_cast<std::size_t>(j)]);
            std::vector<fe> row{finv.at(0, 0), finv.at(0, 1), finv.at(0, 2)};
            y[static_cast<std::size_t>(j)] = tw.phi_inv(row);
        }
        LinearCode A = gss_algorithm2(C, mon);
        LinearCode B = gss_algorithm3(C, mon.perm, y);
        CHECK(row_space_equal(A.G, B.G));
        CHECK(row_space_equal(A.G, gss_algorithm2_reference(C, mon)));
    }
}

TEST_CASE("identity maps select the first expansion component") {
    Tower tw(2, 1, 3);
    Rng rng(13);
    LinearCode C = random_code(tw.top(), 6, 3, rng);
    MonomialIsometry mon = identity_isometry(tw.mid(), 6, 3);
    LinearCode A = gss_algorithm2(C, mon);
    CHECK(row_space_equal(A.G, s_u(C, {1, 1, 1, 1, 1, 1}).G));
}

TEST_CASE("subspace subcode membership") {
    Tower tw(2, 1, 3);
    Rng rng(17);
    Mat V = Mat::from_rows(tw.mid(), {{1, 0, 0}, {0, 0, 1}}); // span{1, alpha^2}
    for (int trial = 0; trial < 10; ++trial) {
        LinearCode C = random_code(tw.top(), 6, 4, rng);
        BlockCode S = subspace_subcode(C, V);
        CHECK(S.r == 2);
        CHECK(S.nblocks == 6);
        // every z-row lifts to a parent codeword with coordinates in span(V)
        for (int i = 0; i < S.kq(); ++i) {
            std::vector<fe> z(static_cast<std::size_t>(S.G.cols));
            for (int j = 0; j < S.G.cols; ++j) z[static_cast<std::size_t>(j)] = S.G.at(i, j);
            SubspaceFamily W = uniform_family(tw, 6, V);
            std::vector<fe> lifted = lift_block_word(W, z);
            Mat one(tw.top(), 1, 6);
            for (int j = 0; j < 6; ++j) one.at(0, j) = lifted[static_cast<std::size_t>(j)];
            CHECK(rank(vstack(C.G, one)) == C.k());
        }
    }
}

TEST_CASE("rank-m subspace subcode is the whole code") {
    Tower tw(2, 1, 3);
    Rng rng(19);
    LinearCode C = random_code(tw.top(), 5, 3, rng);
    BlockCode S = subspace_subcode(C, Mat::identity(tw.mid(), 3));
    CHECK(S.r == 3);
    CHECK(S.kq() == 3 * 3); // full expansion dimension
}

TEST_CASE("per-position family construction matches the block example") {
    Tower tw(2, 1, 3);
    LinearCode C = rs_generator(make_rs(tw, 7, 5));
    SubspaceFamily W = make_family(tw, refdata::family_bases(tw));
    BlockCode B = gss_w(C, W);
    CHECK(B.r == 2);
    CHECK(B.nblocks == 7);
    CHECK(B.kq() == 8);
    CHECK(row_space_equal(B.G, refdata::derived_block_generator(tw)));
}

TEST_CASE("rank-one families reduce to the element parametrization") {
    Tower tw(2, 1, 3);
    Rng rng(23);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 2 + static_cast<int>(rng.below(7));
        int k = 1 + static_cast<int>(rng.below(n));
        LinearCode C = random_code(tw.top(), n, k, rng);
        std::vector<fe> y(static_cast<std::size_t>(n));
        for (fe& v : y) v = rng.nonzero(tw.top());
        BlockCode A = gss_w(C, family_from_elements(tw, y));
        std::vector<int> id_perm(static_cast<std::size_t>(n));
        std::iota(id_perm.begin(), id_perm.end(), 0);
        CHECK(row_space_equal(A.G, gss_algorithm3(C, id_perm, y).G));
    }
}

TEST_CASE("lift and project round trip") {
    Tower tw(2, 1, 3);
    Rng rng(29);
    SubspaceFamily W = random_family(tw, 5, 2, rng);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<fe> z(10);
        for (fe& v : z) v = rng.elem(tw.mid());
        std::vector<fe> c = lift_block_word(W, z);
        auto back = project_to_family(W, c);
        REQUIRE(back.has_value());
        CHECK(*back == z);
    }
    // a value outside its subspace cannot project
    SubspaceFamily T = family_from_tuple(tw, {1, 1, 1, 1, 1});
    std::vector<fe> c(5, 0);
    c[2] = 2; // alpha, but V_2 = span(1)
    CHECK(!project_to_family(T, c).has_value());
}

TEST_CASE("decoding through the family") {
    Tower tw(2, 1, 3);
    GrsSpec parent = make_rs(tw, 7, 5);
    SubspaceFamily W = make_family(tw, refdata::family_bases(tw));
    BlockCode B = gss_w(rs_generator(parent), W);
    Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<fe> msg(static_cast<std::size_t>(B.kq()));
        for (fe& v : msg) v = rng.elem(tw.mid());
        std::vector<fe> z = mul_row(msg, B.G);
        std::vector<fe> noisy = z;
        int pos = static_cast<int>(rng.below(7));
        unsigned pat = 1 + static_cast<unsigned>(rng.below(3));
        noisy[static_cast<std::size_t>(pos) * 2] ^= pat & 1u;
        noisy[static_cast<std::size_t>(pos) * 2 + 1] ^= (pat >> 1) & 1u;
        GssDecodeResult res = gss_decode(parent, W, noisy);
        REQUIRE(res.ok);
        CHECK(res.word == z);
        CHECK(lift_block_word(W, res.word) == res.parent_codeword);
    }
}

TEST_CASE("decoding flags parent words that leave the family") {
    Tower tw(2, 1, 3);
    GrsSpec parent = make_rs(tw, 7, 5);
    SubspaceFamily W = make_family(tw, refdata::family_bases(tw));

    // solve z_i * W_i = phi(x) for one block, if possible
    auto block_coords = [&](int i, fe x) -> std::optional<std::pair<fe, fe>> {
        const Mat& Wi = W.bases[static_cast<std::size_t>(i)];
        std::vector<fe> coords = tw.phi(x);
        for (unsigned cand = 0; cand < 4; ++cand) {
            std::vector<fe> acc(3, 0);
            for (int s = 0; s < 2; ++s)
                if ((cand >> s) & 1u)
                    for (int t = 0; t < 3; ++t)
                        acc[static_cast<std::size_t>(t)] ^= Wi.at(s, t);
            if (acc == coords) return std::pair<fe, fe>{cand & 1u, (cand >> 1) & 1u};
        }
        return std::nullopt;
    };

    // find a parent codeword representable in every block but exactly one;
    // zeroing that block gives a word at block distance 1 from it, so the
    // parent decoder recovers the out-of-family codeword and must say so
    Rng rng(37);
    bool exercised = false;
    for (int trial = 0; trial < 500 && !exercised; ++trial) {
        std::vector<fe> msg(5);
        for (fe& v : msg) v = rng.elem(tw.top());
        std::vector<fe> cw = encode(parent, msg);
        std::vector<fe> z(14, 0);
        int missing = 0;
        for (int i = 0; i < 7; ++i) {
            auto zc = block_coords(i, cw[static_cast<std::size_t>(i)]);
            if (!zc) {
                ++missing;
            } else {
                z[static_cast<std::size_t>(i) * 2] = zc->first;
                z[static_cast<std::size_t>(i) * 2 + 1] = zc->second;
            }
        }
        if (missing != 1) continue;
        exercised = true;
        GssDecodeResult res = gss_decode(parent, W, z);
        CHECK(!res.ok);
        CHECK(res.outside_family);
        CHECK(res.parent_codeword == cw);
    }
    CHECK(exercised);
}

} // TEST_SUITE
