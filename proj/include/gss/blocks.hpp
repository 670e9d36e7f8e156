#pragma once

#include "gss/codes.hpp"
#include "gss/rng.hpp"

#include <utility>

namespace gss {

// An additive block code: a GF(q)-linear subspace of (F_q^r)^n, measured by
// block weight (the number of nonzero r-blocks).  The generator matrix is
// over GF(q) with n*r columns, blocks laid out consecutively.
struct BlockCode {
    Mat G;
    int r = 1;
    int nblocks = 0;

    int kq() const { return G.rows; }
    // Exact rational pseudo-dimension kq/r, reduced.
    std::pair<long long, long long> pseudo_dim() const;
};

BlockCode make_block_code(Mat G, int r);       // canonicalizes via RREF
BlockCode make_block_code_exact(Mat G, int r); // keeps G; requires full rank

// The GF(q)-expansion of a code over GF(q^m) in the tower's basis: row (i, s)
// is the blockwise expansion of basis[s] * (row i), so blocks have size m.
BlockCode q_ary_image(const LinearCode& C);

int block_weight(const std::vector<fe>& word, int r);

DistanceReport block_min_distance(const BlockCode& C, const DistanceBudget& budget = {});

// The dual taken as a plain length-(n*r) code, kept in block layout.
BlockCode block_dual(const BlockCode& C);

// A block permutation combined with an invertible linear map per block;
// exactly the block-weight-preserving linear maps.  Blocks act on the right
// (x_i -> x_i * f_i), and the permutation sends block i to position perm[i],
// applied after the per-block maps.
struct MonomialIsometry {
    std::vector<int> perm;
    std::vector<Mat> f;
};

MonomialIsometry identity_isometry(Field F, int nblocks, int r);
MonomialIsometry random_isometry(Field F, int nblocks, int r, Rng& rng);
MonomialIsometry inverse_isometry(const MonomialIsometry& mon);

std::vector<fe> apply_isometry_word(const MonomialIsometry& mon,
                                    const std::vector<fe>& word, int r);
BlockCode apply_isometry(const BlockCode& C, const MonomialIsometry& mon);

// For a diagonal isometry (identity permutation): f*_i = (f_i^{-1})^T, the
// map carrying the dual of C to the dual of the transformed code.
MonomialIsometry adjoint_isometry(const MonomialIsometry& mon);

} // namespace gss
