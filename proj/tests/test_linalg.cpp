#include "doctest.h"

#include "gss/linalg.hpp"
#include "gss/rng.hpp"

using namespace gss;

namespace {

Mat random_mat(Field F, int r, int c, Rng& rng) {
    Mat M(F, r, c);
    for (fe& v : M.a) v = rng.elem(F);
    return M;
}

Mat random_invertible(Field F, int n, Rng& rng) {
    for (;;) {
        Mat M = random_mat(F, n, n, rng);
        if (rank(M) == n) return M;
    }
}

} // namespace

TEST_SUITE("linalg") {

TEST_CASE("rref over gf2") {
    Tower tw(2, 1, 1);
    Mat M = Mat::from_rows(tw.mid(), {{0, 1, 1}, {1, 1, 0}});
    RrefResult rr = rref(M);
    CHECK(rr.rank == 2);
    CHECK(rr.pivots == std::vector<int>{0, 1});
    CHECK(rr.R == Mat::from_rows(tw.mid(), {{1, 0, 1}, {0, 1, 1}}));
    // idempotent
    CHECK(rref(rr.R).R == rr.R);
}

TEST_CASE("rank and kernel dimensions") {
    Tower tw(2, 1, 3);
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Mat M = random_mat(tw.top(), 5, 9, rng);
        int rk = rank(M);
        Mat K = right_kernel(M);
        CHECK(K.rows == 9 - rk);
        CHECK(rank(K) == K.rows);
        CHECK(mul(M, transpose(K)).is_zero());
    }
}

TEST_CASE("packed binary elimination agrees with the generic path") {
    // a binary matrix large enough to hit the bit-packed branch
    Tower tw(2, 1, 1);
    Rng rng(9);
    Mat M = random_mat(tw.mid(), 40, 90, rng);
    Mat K = right_kernel(M);
    CHECK(K.rows == 90 - rank(M));
    CHECK(mul(M, transpose(K)).is_zero());
    RrefResult rr = rref(M);
    CHECK(rref(rr.R).R == rr.R);
    CHECK(static_cast<int>(rr.pivots.size()) == rr.rank);
}

TEST_CASE("inverse round trip") {
    Tower tw(3, 1, 2); // GF(9)
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        Mat A = random_invertible(tw.top(), 6, rng);
        CHECK(mul(A, invert(A)) == Mat::identity(tw.top(), 6));
        CHECK(mul(invert(A), A) == Mat::identity(tw.top(), 6));
    }
}

TEST_CASE("systematic form") {
    Tower tw(2, 1, 2);
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Mat G = random_mat(tw.top(), 4, 9, rng);
        if (rank(G) < 4) continue;
        SystematicResult sf = systematic_form(G);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(sf.G.at(i, j) == (i == j ? 1u : 0u));
        // undoing the column order recovers the row space
        Mat back(tw.top(), sf.G.rows, sf.G.cols);
        for (int j = 0; j < sf.G.cols; ++j)
            for (int i = 0; i < sf.G.rows; ++i)
                back.at(i, sf.col_order[j]) = sf.G.at(i, j);
        CHECK(row_space_equal(back, G));
        if (!sf.permuted)
            for (int j = 0; j < sf.G.cols; ++j) CHECK(sf.col_order[j] == j);
    }
}

TEST_CASE("row space comparison") {
    Tower tw(2, 1, 3);
    Rng rng(21);
    Mat G = random_mat(tw.top(), 3, 7, rng);
    // mixing rows by an invertible matrix preserves the span
    Mat T = random_invertible(tw.top(), 3, rng);
    CHECK(row_space_equal(G, mul(T, G)));
    CHECK(row_space_equal(G, G));
    // a strict subspace never matches
    if (rank(G) == 3) {
        Mat H(tw.top(), 2, 7);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 7; ++j) H.at(i, j) = G.at(i, j);
        CHECK(!row_space_equal(G, H));
    }
}

TEST_CASE("column selection helpers") {
    Tower tw(2, 1, 1);
    Mat M = Mat::from_rows(tw.mid(), {{1, 0, 1, 1}, {0, 1, 0, 1}});
    CHECK(select_columns(M, {0, 3}) ==
          Mat::from_rows(tw.mid(), {{1, 1}, {0, 1}}));
    CHECK(delete_columns(M, {1, 2}) ==
          Mat::from_rows(tw.mid(), {{1, 1}, {0, 1}}));
    Mat Z(tw.mid(), 2, 3);
    Z.at(1, 0) = 1;
    CHECK(nonzero_rows(Z).rows == 1);
    std::vector<fe> x{1, 1};
    CHECK(mul_row(x, M) == std::vector<fe>{1, 1, 1, 0});
}

TEST_CASE("multiplication matrices represent the field action") {
    Tower tw(2, 1, 4);
    Field F = tw.top();
    Rng rng(25);
    for (int trial = 0; trial < 50; ++trial) {
        fe beta = rng.elem(F), x = rng.elem(F);
        Mat M = mult_matrix(tw, beta);
        CHECK(mul_row(tw.phi(x), M) == tw.phi(F.mul(x, beta)));
    }
    // multiplicativity: M_a M_b = M_ab
    fe a = 7, b = 11;
    CHECK(mul(mult_matrix(tw, a), mult_matrix(tw, b)) ==
          mult_matrix(tw, F.mul(b, a)));
}

TEST_CASE("basis completion") {
    Tower tw(2, 1, 4);
    Rng rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        Mat V = random_mat(tw.mid(), 2, 4, rng);
        if (rank(V) < 2) continue;
        Mat B = complete_basis(V);
        CHECK(B.rows == 4);
        CHECK(rank(B) == 4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 4; ++j) CHECK(B.at(i, j) == V.at(i, j));
    }
}

TEST_CASE("exceptional inputs") {
    Tower tw(2, 1, 2);
    Mat S(tw.top(), 2, 2); // singular (all zero)
    CHECK_THROWS(invert(S));
    Mat V(tw.mid(), 3, 2); // more rows than columns cannot be full rank
    CHECK_THROWS(complete_basis(V));
}

} // TEST_SUITE
