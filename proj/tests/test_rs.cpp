#include "doctest.h"

#include "gss/refdata.hpp"
#include "gss/rng.hpp"
#include "gss/rs.hpp"

using namespace gss;

namespace {

int diff_count(const std::vector<fe>& a, const std::vector<fe>& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

} // namespace

TEST_SUITE("rs") {

TEST_CASE("spec builders") {
    Tower tw(2, 1, 3);
    GrsSpec rs = make_rs(tw, 7, 5);
    CHECK(rs.n() == 7);
    CHECK(rs.d() == 3);
    CHECK(rs.t() == 1);
    CHECK(rs.support == std::vector<fe>{1, 2, 4, 3, 6, 7, 5}); // alpha powers
    CHECK(!rs.extended);

    GrsSpec ext = make_extended_rs(tw, 5);
    CHECK(ext.n() == 8);
    CHECK(ext.extended);
    CHECK(ext.support == std::vector<fe>{0, 1, 2, 3, 4, 5, 6, 7});

    CHECK_THROWS(make_rs(tw, 8, 2));                       // alpha powers repeat
    CHECK_THROWS(make_grs(tw, {1, 1, 2}, {1, 1, 1}, 2));   // duplicate support
    CHECK_THROWS(make_grs(tw, {1, 2, 3}, {1, 0, 1}, 2));   // zero multiplier
    CHECK_THROWS(make_grs(tw, {1, 2, 3}, {1, 1, 1}, 4));   // k > n
}

TEST_CASE("systematic form of the [7,6] generator matches the reference") {
    Tower tw(2, 1, 3);
    LinearCode C = rs_generator(make_rs(tw, 7, 6));
    CHECK(rref(C.G).R == refdata::rs7_systematic(tw));
}

TEST_CASE("encode agrees with the generator matrix") {
    Tower tw(2, 1, 4);
    GrsSpec spec = make_grs(tw, {0, 1, 2, 9, 5, 7}, {1, 3, 1, 1, 8, 2}, 3);
    LinearCode C = rs_generator(spec);
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<fe> msg(3);
        for (fe& v : msg) v = rng.elem(tw.top());
        CHECK(encode(spec, msg) == mul_row(msg, C.G));
    }
}

TEST_CASE("dual multipliers give a parity check") {
    Tower tw(2, 1, 4);
    GrsSpec spec = make_grs(tw, {0, 1, 2, 9, 5, 7, 12}, {1, 3, 1, 1, 8, 2, 6}, 3);
    std::vector<fe> y = dual_multipliers(spec);
    Field F = spec.field();
    LinearCode C = rs_generator(spec);
    // H has rows (y_j a_j^s), s < n - k
    Mat H(F, spec.n() - spec.k, spec.n());
    for (int j = 0; j < spec.n(); ++j) {
        fe p = 1;
        for (int s = 0; s < H.rows; ++s) {
            H.at(s, j) = F.mul(y[static_cast<std::size_t>(j)], p);
            p = F.mul(p, spec.support[static_cast<std::size_t>(j)]);
        }
    }
    CHECK(mul(H, transpose(C.G)).is_zero());
    CHECK(rank(H) == H.rows);
}

TEST_CASE("bounded-distance decoding on a [7,5] code") {
    Tower tw(2, 1, 3);
    GrsSpec spec = make_rs(tw, 7, 5);
    Rng rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<fe> msg(5);
        for (fe& v : msg) v = rng.elem(tw.top());
        std::vector<fe> cw = encode(spec, msg);

        DecodeResult clean = decode(spec, cw);
        CHECK(clean.ok);
        CHECK(clean.codeword == cw);
        CHECK(clean.error_positions.empty());

        std::vector<fe> noisy = cw;
        int pos = static_cast<int>(rng.below(7));
        noisy[static_cast<std::size_t>(pos)] =
            tw.top().add(noisy[static_cast<std::size_t>(pos)], rng.nonzero(tw.top()));
        DecodeResult fixed = decode(spec, noisy);
        CHECK(fixed.ok);
        CHECK(fixed.codeword == cw);
        CHECK(fixed.error_positions == std::vector<int>{pos});
    }
}

TEST_CASE("decoding never exceeds the radius") {
    Tower tw(2, 1, 3);
    GrsSpec spec = make_rs(tw, 7, 5); // t = 1
    Rng rng(19);
    int failures = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<fe> msg(5);
        for (fe& v : msg) v = rng.elem(tw.top());
        std::vector<fe> cw = encode(spec, msg);
        std::vector<fe> noisy = cw;
        for (int p : rng.subset(7, 2))
            noisy[static_cast<std::size_t>(p)] =
                tw.top().add(noisy[static_cast<std::size_t>(p)], rng.nonzero(tw.top()));
        DecodeResult res = decode(spec, noisy);
        if (!res.ok) {
            ++failures;
            CHECK(!res.reason.empty());
        } else {
            // two errors may legitimately land within distance one of a
            // different codeword, but never beyond the promised radius
            CHECK(diff_count(res.codeword, noisy) <= spec.t());
            CHECK(res.codeword != cw);
        }
    }
    CHECK(failures > 0);
}

TEST_CASE("extended support corrects errors at the zero point") {
    Tower tw(2, 1, 4);
    GrsSpec spec = make_extended_rs(tw, 13); // [16,13,4], t = 1
    CHECK(spec.support[0] == 0);
    Rng rng(23);
    for (int pos = 0; pos < 16; ++pos) {
        std::vector<fe> msg(13);
        for (fe& v : msg) v = rng.elem(tw.top());
        std::vector<fe> cw = encode(spec, msg);
        for (fe val : {1u, 7u, 15u}) {
            std::vector<fe> noisy = cw;
            noisy[static_cast<std::size_t>(pos)] =
                tw.top().add(noisy[static_cast<std::size_t>(pos)], val);
            DecodeResult res = decode(spec, noisy);
            CHECK(res.ok);
            CHECK(res.codeword == cw);
            CHECK(res.error_positions == std::vector<int>{pos});
            CHECK(res.error_values == std::vector<fe>{val});
        }
    }
}

TEST_CASE("larger radius with multipliers") {
    Tower tw(2, 1, 4);
    std::vector<fe> support{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    std::vector<fe> mult{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    GrsSpec spec = make_grs(tw, support, mult, 4); // d = 9, t = 4
    Rng rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<fe> msg(4);
        for (fe& v : msg) v = rng.elem(tw.top());
        std::vector<fe> cw = encode(spec, msg);
        std::vector<fe> noisy = cw;
        int nerr = 1 + static_cast<int>(rng.below(4));
        for (int p : rng.subset(12, nerr))
            noisy[static_cast<std::size_t>(p)] =
                tw.top().add(noisy[static_cast<std::size_t>(p)], rng.nonzero(tw.top()));
        DecodeResult res = decode(spec, noisy);
        CHECK(res.ok);
        CHECK(res.codeword == cw);
    }
}

TEST_CASE("rate-one codes decode to themselves") {
    Tower tw(2, 1, 3);
    GrsSpec spec = make_grs(tw, {1, 2, 3}, {1, 1, 1}, 3); // k == n
    std::vector<fe> w{5, 0, 7};
    DecodeResult res = decode(spec, w);
    CHECK(res.ok);
    CHECK(res.codeword == w);
}

TEST_CASE("alternant codes are subfield subcodes") {
    Tower tw(2, 1, 3);
    GrsSpec spec = make_rs(tw, 7, 5);
    LinearCode alt = alternant_code(spec);
    CHECK(alt.G.F.size() == 2);
    CHECK(row_space_equal(alt.G, subfield_subcode(rs_generator(spec)).G));
}

} // TEST_SUITE
