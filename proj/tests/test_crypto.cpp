#include "doctest.h"

#include "gss/crypto.hpp"
#include "gss/refdata.hpp"

#include <cmath>

using namespace gss;

TEST_SUITE("crypto") {

TEST_CASE("work factor on small instances") {
    // C(10,5)/C(8,5) = 252/56
    double wf = workfactor_log2(10, 5, 2);
    CHECK(wf == doctest::Approx(std::log2(252.0 / 56.0)).epsilon(1e-12));
    CHECK(workfactor_log2(10, 5, 0) == doctest::Approx(0.0));
    CHECK_THROWS(workfactor_log2(10, 11, 1));
    CHECK_THROWS(workfactor_log2(10, 5, 6)); // n - t < k
}

TEST_CASE("work factor floors match the frozen table") {
    for (const auto& w : refdata::kWorkfactors) {
        double wf = workfactor_log2(w.n, w.k, w.t);
        CHECK(static_cast<long long>(std::floor(wf)) == w.floor_log2);
        CHECK(wf >= 128.0);
    }
}

TEST_CASE("systematic key sizes") {
    CHECK(keysize_systematic(2, 5, 1) == 2 * 3);
    CHECK(keysize_systematic(1040, 1400, 2) == refdata::kKeyBitsQuaternary / 2);
    CHECK(keysize_systematic(1040, 1400, 4) == refdata::kKeyBitsQuaternary);
    CHECK(keysize_systematic(2638, 4096, 1) == refdata::kKeyBitsBinaryLarge);
    CHECK(keysize_systematic(3556, 4096, 1) == refdata::kKeyBitsGoppa);
    CHECK_THROWS(keysize_systematic(5, 4, 1));
}

TEST_CASE("key generation is deterministic in the seed") {
    Tower tw(2, 1, 3);
    GrsSpec parent = make_rs(tw, 7, 5);
    auto [pub1, sec1] = keygen(parent, 2, 12345);
    auto [pub2, sec2] = keygen(parent, 2, 12345);
    CHECK(pub1.G == pub2.G);
    CHECK(pub1.pivots == pub2.pivots);
    CHECK(sec1.perm == sec2.perm);
    auto [pub3, sec3] = keygen(parent, 2, 54321);
    CHECK(pub3.G.rows == pub1.G.rows);
    CHECK(pub1.n == 7);
    CHECK(pub1.r == 2);
    CHECK(pub1.t == 1);
}

TEST_CASE("public generator is systematic on its pivots") {
    Tower tw(2, 1, 3);
    auto [pub, sec] = keygen(make_rs(tw, 7, 5), 2, 99);
    REQUIRE(static_cast<int>(pub.pivots.size()) == pub.G.rows);
    for (int i = 0; i < pub.G.rows; ++i)
        for (int j = 0; j < pub.G.rows; ++j)
            CHECK(pub.G.at(i, pub.pivots[static_cast<std::size_t>(j)]) == (i == j ? 1u : 0u));
}

TEST_CASE("ciphertexts carry exactly t error blocks") {
    Tower tw(2, 1, 3);
    auto [pub, sec] = keygen(make_rs(tw, 7, 5), 2, 7);
    Rng rng(1);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<fe> msg(static_cast<std::size_t>(pub.G.rows));
        for (fe& v : msg) v = rng.elem(pub.G.F);
        std::vector<fe> ct = encrypt(pub, msg, rng);
        std::vector<fe> clean = mul_row(msg, pub.G);
        int weight = 0;
        for (int b = 0; b < pub.n; ++b) {
            bool hit = false;
            for (int s = 0; s < pub.r; ++s)
                hit |= ct[static_cast<std::size_t>(b * pub.r + s)] !=
                       clean[static_cast<std::size_t>(b * pub.r + s)];
            weight += hit;
        }
        CHECK(weight == pub.t);
    }
}

TEST_CASE("round trips") {
    Tower tw(2, 1, 3);
    auto [pub, sec] = keygen(make_rs(tw, 7, 5), 2, 42);
    Rng rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<fe> msg(static_cast<std::size_t>(pub.G.rows));
        for (fe& v : msg) v = rng.elem(pub.G.F);
        std::vector<fe> ct = encrypt(pub, msg, rng);
        DecryptResult res = decrypt(sec, pub, ct);
        REQUIRE(res.ok);
        CHECK(res.message == msg);
    }
}

TEST_CASE("an unreachable ciphertext is rejected") {
    Tower tw(2, 1, 3);
    auto [pub, sec] = keygen(make_rs(tw, 7, 5), 2, 8);
    Rng rng(3);
    const int kq = pub.G.rows;
    int rejected = 0, crafted = 0;
    for (int attempt = 0; attempt < 400 && crafted < 10; ++attempt) {
        std::vector<fe> msg(static_cast<std::size_t>(kq));
        for (fe& v : msg) v = rng.elem(pub.G.F);
        std::vector<fe> ct = mul_row(msg, pub.G);
        // overload two blocks, then keep the word only if no codeword
        // sits within block distance t of it
        std::vector<int> blocks = rng.subset(pub.n, pub.t + 1);
        for (int b : blocks) {
            unsigned pat = 1 + static_cast<unsigned>(rng.below((1u << pub.r) - 1));
            for (int s = 0; s < pub.r; ++s)
                ct[static_cast<std::size_t>(b * pub.r + s)] ^= (pat >> s) & 1u;
        }
        bool near = false;
        for (unsigned w = 0; w < (1u << kq) && !near; ++w) {
            std::vector<fe> other(static_cast<std::size_t>(kq));
            for (int i = 0; i < kq; ++i) other[static_cast<std::size_t>(i)] = (w >> i) & 1u;
            std::vector<fe> cw = mul_row(other, pub.G);
            int dist = 0;
            for (int b = 0; b < pub.n && dist <= pub.t; ++b) {
                bool hit = false;
                for (int s = 0; s < pub.r; ++s)
                    hit |= cw[static_cast<std::size_t>(b * pub.r + s)] !=
                           ct[static_cast<std::size_t>(b * pub.r + s)];
                dist += hit;
            }
            near = dist <= pub.t;
        }
        if (near) continue;
        ++crafted;
        DecryptResult res = decrypt(sec, pub, ct);
        if (!res.ok) ++rejected;
    }
    REQUIRE(crafted == 10);
    CHECK(rejected == crafted);
}

TEST_CASE("keygen input validation") {
    Tower tw(2, 1, 3);
    GrsSpec parent = make_rs(tw, 7, 5);
    CHECK_THROWS(keygen(parent, 0, 1));
    CHECK_THROWS(keygen(parent, 4, 1)); // r > m
}

} // TEST_SUITE
