#include "doctest.h"

#include "gss/io.hpp"
#include "gss/refdata.hpp"
#include "gss/rng.hpp"

#include <sstream>

using namespace gss;

TEST_SUITE("io") {

TEST_CASE("tower header round trip") {
    Tower tw(2, 2, 2); // GF(4) inside GF(16)
    std::stringstream ss;
    write_tower(ss, tw);
    auto back = read_tower(ss);
    CHECK(back->p() == 2);
    CHECK(back->e() == 2);
    CHECK(back->m() == 2);
    CHECK(back->mid_modulus() == tw.mid_modulus());
    CHECK(back->top_modulus() == tw.top_modulus());
    CHECK(back->basis() == tw.basis());
}

TEST_CASE("linear code round trip") {
    Tower tw(2, 1, 3);
    LinearCode C = make_code_exact(refdata::hamming7(tw));
    std::stringstream ss;
    save_code(ss, tw, C);
    Document doc = load_document(ss);
    REQUIRE(doc.kind == Document::Kind::Code);
    CHECK(doc.code.G == C.G);
    CHECK(doc.tower->m() == 3);
}

TEST_CASE("block code round trip") {
    Tower tw(2, 1, 3);
    BlockCode B = make_block_code(refdata::derived_block_generator(tw), 2);
    std::stringstream ss;
    save_block(ss, tw, B);
    Document doc = load_document(ss);
    REQUIRE(doc.kind == Document::Kind::Block);
    CHECK(doc.block.r == 2);
    CHECK(doc.block.nblocks == 7);
    CHECK(doc.block.G == B.G);
}

TEST_CASE("evaluation code round trip") {
    Tower tw(2, 1, 4);
    Rng rng(1);
    std::vector<fe> mult(12);
    for (fe& v : mult) v = rng.nonzero(tw.top());
    std::vector<fe> support;
    for (fe a = 2; support.size() < 12; ++a) support.push_back(a);
    GrsSpec spec = make_grs(tw, support, mult, 4);
    std::stringstream ss;
    save_grs(ss, spec);
    Document doc = load_document(ss);
    REQUIRE(doc.kind == Document::Kind::Grs);
    CHECK(doc.grs.support == spec.support);
    CHECK(doc.grs.mult == spec.mult);
    CHECK(doc.grs.k == 4);
    CHECK(doc.grs.extended == false);
    CHECK(rs_generator(doc.grs).G == rs_generator(spec).G);

    GrsSpec ext = make_extended_rs(tw, 13);
    std::stringstream ss2;
    save_grs(ss2, ext);
    Document doc2 = load_document(ss2);
    CHECK(doc2.grs.extended);
    CHECK(doc2.grs.n() == 16);
}

TEST_CASE("family round trip") {
    Tower tw(2, 1, 3);
    SubspaceFamily W = make_family(tw, refdata::family_bases(tw));
    std::stringstream ss;
    save_family(ss, W);
    Document doc = load_document(ss);
    REQUIRE(doc.kind == Document::Kind::Family);
    CHECK(doc.family.r == 2);
    CHECK(doc.family.n() == 7);
    for (std::size_t i = 0; i < W.bases.size(); ++i)
        CHECK(doc.family.bases[i] == W.bases[i]);
}

TEST_CASE("file variants") {
    Tower tw(2, 1, 3);
    GrsSpec spec = make_rs(tw, 7, 5);
    const std::string path = "io_test_grs.txt";
    save_grs_file(path, spec);
    Document doc = load_document_file(path);
    CHECK(doc.kind == Document::Kind::Grs);
    CHECK(doc.grs.k == 5);
    std::remove(path.c_str());
    CHECK_THROWS(load_document_file("io_test_missing.txt"));
}

TEST_CASE("key pairs survive the disk") {
    Tower tw(2, 1, 3);
    KeyPair kp = keygen(make_rs(tw, 7, 5), 2, 2024);
    save_public_key("io_test_pub.json", kp.pub);
    save_secret_key("io_test_sec.json", kp.sec);
    LoadedPublicKey pub = load_public_key("io_test_pub.json");
    LoadedSecretKey sec = load_secret_key("io_test_sec.json");
    CHECK(pub.key.G == kp.pub.G);
    CHECK(pub.key.pivots == kp.pub.pivots);
    CHECK(pub.key.n == 7);
    CHECK(pub.key.r == 2);
    CHECK(pub.key.t == 1);
    CHECK(sec.key.perm == kp.sec.perm);
    CHECK(sec.key.parent.support == kp.sec.parent.support);

    // the loaded pair must actually decrypt what the loaded public key encrypts
    Rng rng(5);
    std::vector<fe> msg(static_cast<std::size_t>(pub.key.G.rows));
    for (fe& v : msg) v = rng.elem(pub.key.G.F);
    std::vector<fe> ct = encrypt(pub.key, msg, rng);
    DecryptResult res = decrypt(sec.key, pub.key, ct);
    REQUIRE(res.ok);
    CHECK(res.message == msg);

    std::remove("io_test_pub.json");
    std::remove("io_test_sec.json");
}

TEST_CASE("word parsing") {
    std::vector<fe> w{0, 7, 3, 1};
    CHECK(format_word(w) == "0 7 3 1");
    CHECK(parse_word("0 7 3 1") == w);
    CHECK(parse_word("  0\t7  3 1\n") == w);
    CHECK(parse_word("") == std::vector<fe>{});
    CHECK_THROWS(parse_word("1 2 x"));
}

TEST_CASE("malformed documents are refused") {
    CHECK_THROWS([] {
        std::stringstream ss("not a document at all");
        return load_document(ss);
    }());
    Tower tw(2, 1, 3);
    LinearCode C = make_code_exact(refdata::hamming7(tw));
    std::stringstream full;
    save_code(full, tw, C);
    std::string text = full.str();
    std::stringstream truncated(text.substr(0, text.size() / 2));
    CHECK_THROWS(load_document(truncated));
}

} // TEST_SUITE
