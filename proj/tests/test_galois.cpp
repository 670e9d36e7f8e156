#include "doctest.h"

#include "gss/galois.hpp"
#include "gss/rng.hpp"

using namespace gss;

TEST_SUITE("galois") {

TEST_CASE("gf8 known products") {
    Tower tw(2, 1, 3); // modulus x^3 + x + 1
    Field F = tw.top();
    CHECK(F.size() == 8);
    CHECK(F.characteristic() == 2);
    CHECK(F.mul(2, 2) == 4); // x * x
    CHECK(F.mul(2, 4) == 3); // x^3 = x + 1
    CHECK(F.mul(4, 4) == 6); // x^4 = x^2 + x
    CHECK(F.mul(3, 5) == 4); // (x+1)(x^2+1) = x^2
    for (fe a = 1; a < 8; ++a) {
        CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.div(a, a) == 1);
        CHECK(F.pow(a, 7) == 1);
        CHECK(F.pow(a, 0) == 1);
    }
    CHECK(F.pow(2, -1) == F.inv(2));
}

TEST_CASE("field axioms sampled") {
    Tower tw(2, 1, 4);
    Field F = tw.top();
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        fe a = rng.elem(F), b = rng.elem(F), c = rng.elem(F);
        CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        CHECK(F.add(a, F.neg(a)) == 0);
        CHECK(F.sub(a, b) == F.add(a, F.neg(b)));
    }
}

TEST_CASE("char-3 arithmetic") {
    Tower tw(3, 1, 2); // GF(9)
    Field F = tw.top();
    CHECK(F.characteristic() == 3);
    CHECK(F.size() == 9);
    CHECK(F.add(1, 2) == 0);
    CHECK(F.neg(1) == 2);
    for (fe a = 1; a < 9; ++a) {
        CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.pow(a, 8) == 1);
    }
}

TEST_CASE("digits and coordinates") {
    Tower tw(2, 1, 3);
    for (fe x = 0; x < 8; ++x) {
        CHECK(tw.from_digits(tw.digits(x)) == x);
        CHECK(tw.phi_inv(tw.phi(x)) == x);
        // the default basis is the power basis, so phi is just digits
        CHECK(tw.phi(x) == tw.digits(x));
    }
    CHECK(tw.digits(6) == std::vector<fe>{0, 1, 1}); // x^2 + x
}

TEST_CASE("trace lands in the middle field and is linear") {
    Tower tw(2, 1, 3);
    Field F = tw.top();
    CHECK(tw.trace(0) == 0);
    CHECK(tw.trace(1) == 1);
    CHECK(tw.trace(2) == 0); // x + x^2 + x^4 = 0
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        fe a = rng.elem(F), b = rng.elem(F);
        CHECK(tw.trace(a) < tw.q());
        CHECK(tw.trace(F.add(a, b)) == tw.mid().add(tw.trace(a), tw.trace(b)));
    }
}

TEST_CASE("two-level tower embeds its middle field") {
    Tower tw(2, 2, 2); // GF(4) inside GF(16)
    Field mid = tw.mid(), top = tw.top();
    CHECK(mid.size() == 4);
    CHECK(top.size() == 16);
    for (fe a = 0; a < 4; ++a)
        for (fe b = 0; b < 4; ++b) {
            CHECK(tw.embed_mid(mid.mul(a, b)) ==
                  top.mul(tw.embed_mid(a), tw.embed_mid(b)));
            CHECK(tw.embed_mid(mid.add(a, b)) ==
                  top.add(tw.embed_mid(a), tw.embed_mid(b)));
        }
    CHECK(tw.alpha() == 4);
    // trace of an embedded element over a degree-2 extension: a + a = 0
    CHECK(tw.trace(tw.embed_mid(3)) == 0);
}

TEST_CASE("degenerate one-level tower") {
    Tower tw(2, 3, 1);
    CHECK(tw.alpha() == 1);
    CHECK(tw.top_size() == 8);
    CHECK(tw.mid().size() == 8);
    CHECK(tw.phi(5) == std::vector<fe>{5});
    CHECK(tw.trace(5) == 5);
}

TEST_CASE("custom coordinate basis") {
    Tower pw(2, 1, 3);
    Tower tw(2, 1, 3, {}, {}, {4, 2, 1}); // power basis reversed
    for (fe x = 0; x < 8; ++x) {
        CHECK(tw.phi_inv(tw.phi(x)) == x);
        auto fwd = pw.phi(x), rev = tw.phi(x);
        CHECK(fwd[0] == rev[2]);
        CHECK(fwd[1] == rev[1]);
        CHECK(fwd[2] == rev[0]);
    }
}

TEST_CASE("default moduli") {
    CHECK(default_prime_modulus(2, 1) == std::vector<fe>{1, 1});       // x + 1
    CHECK(default_prime_modulus(2, 3) == std::vector<fe>{1, 1, 0, 1}); // x^3+x+1
    CHECK(default_prime_modulus(2, 8) ==
          std::vector<fe>{1, 0, 1, 1, 1, 0, 0, 0, 1}); // 0x11d
    auto m9 = default_prime_modulus(3, 2);
    CHECK(m9.size() == 3);
    CHECK(m9.back() == 1); // monic
}

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(7919));
    CHECK(!is_prime(0));
    CHECK(!is_prime(1));
    CHECK(!is_prime(561));
}

TEST_CASE("big tower sanity") {
    Tower tw(2, 1, 9); // GF(512)
    Field F = tw.top();
    CHECK(F.size() == 512);
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        fe a = rng.nonzero(F);
        CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(tw.phi_inv(tw.phi(a)) == a);
    }
}

} // TEST_SUITE
