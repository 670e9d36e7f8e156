#include "gss/gss.hpp"

#include <stdexcept>

namespace gss {

namespace {

void check_tuple(const LinearCode& C, const std::vector<int>& u) {
    const int m = C.G.F.tw->m();
    if (static_cast<int>(u.size()) != C.n())
        throw std::invalid_argument("position tuple length must equal the code length");
    for (int v : u)
        if (v < 1 || v > m)
            throw std::invalid_argument("position entries must lie in 1..m");
}

// Column indices the tuple keeps: component u_i - 1 of block i.
std::vector<int> kept_columns(const std::vector<int>& u, int m) {
    std::vector<int> keep(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        keep[i] = static_cast<int>(i) * m + (u[i] - 1);
    return keep;
}

std::vector<int> dropped_columns(const std::vector<int>& u, int m) {
    std::vector<int> drop;
    drop.reserve(u.size() * (m - 1));
    for (std::size_t i = 0; i < u.size(); ++i)
        for (int s = 0; s < m; ++s)
            if (s != u[i] - 1) drop.push_back(static_cast<int>(i) * m + s);
    return drop;
}

void check_family(const SubspaceFamily& W) {
    if (!W.tw) throw std::invalid_argument("missing field tower");
    const int m = W.tw->m();
    if (W.r < 1 || W.r > m)
        throw std::invalid_argument("subspace dimension must lie in 1..m");
    for (const Mat& M : W.bases) {
        if (M.rows != W.r || M.cols != m)
            throw std::invalid_argument("basis matrix has the wrong shape");
        if (rank(M) != W.r)
            throw std::invalid_argument("basis matrix is rank-deficient");
    }
}

// Solve z * M = v for the unique z (M full row rank); empty when inconsistent.
std::optional<std::vector<fe>> solve_right(const Mat& M, const std::vector<fe>& v) {
    const Field& F = M.F;
    Mat aug(F, M.cols, M.rows + 1);
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) aug.at(j, i) = M.at(i, j);
    for (int j = 0; j < M.cols; ++j) aug.at(j, M.rows) = v[j];
    RrefResult rr = rref(aug);
    std::vector<fe> z(M.rows, 0);
    for (int i = 0; i < rr.rank; ++i) {
        if (rr.pivots[i] == M.rows) return std::nullopt; // pivot in the rhs
        z[rr.pivots[i]] = rr.R.at(i, M.rows);
    }
    return z;
}

// The dual-side core shared by algorithms 2 and 3: out of a parity check H
// of the image, one parity column per block (H_blk_i * c_i), permuted so the
// column for block i lands at position pi[i]; the kernel generates the code.
LinearCode code_from_block_columns(const Mat& H, const std::vector<Mat>& cols,
                                   const std::vector<int>& pi) {
    const Field& F = H.F;
    const int n = static_cast<int>(cols.size());
    Mat Hc(F, H.rows, n);
    for (int i = 0; i < n; ++i)
        for (int row = 0; row < H.rows; ++row) Hc.at(row, pi[i]) = cols[i].at(row, 0);
    RrefResult rr = rref(Hc);
    Mat Hr = nonzero_rows(rr.R);
    Hr.F = F;
    Hr.cols = n;
    return make_code(right_kernel(Hr));
}

void check_permutation(const std::vector<int>& pi, int n) {
    if (static_cast<int>(pi.size()) != n)
        throw std::invalid_argument("permutation length must equal the block count");
    std::vector<char> seen(n, 0);
    for (int v : pi) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("not a permutation");
        seen[v] = 1;
    }
}

} // namespace

SubspaceFamily make_family(const Tower& tw, std::vector<Mat> bases) {
    SubspaceFamily W;
    W.tw = &tw;
    W.r = bases.empty() ? 1 : bases[0].rows;
    W.bases = std::move(bases);
    check_family(W);
    return W;
}

SubspaceFamily uniform_family(const Tower& tw, int n, const Mat& V) {
    return make_family(tw, std::vector<Mat>(n, V));
}

SubspaceFamily family_from_tuple(const Tower& tw, const std::vector<int>& u) {
    const int m = tw.m();
    std::vector<Mat> bases;
    bases.reserve(u.size());
    for (int v : u) {
        if (v < 1 || v > m)
            throw std::invalid_argument("position entries must lie in 1..m");
        Mat M(tw.mid(), 1, m);
        M.at(0, v - 1) = 1;
        bases.push_back(std::move(M));
    }
    return make_family(tw, std::move(bases));
}

SubspaceFamily family_from_elements(const Tower& tw, const std::vector<fe>& y) {
    const int m = tw.m();
    std::vector<Mat> bases;
    bases.reserve(y.size());
    for (fe v : y) {
        if (v == 0) throw std::invalid_argument("spanning elements must be nonzero");
        Mat M(tw.mid(), 1, m);
        std::vector<fe> coords = tw.phi(v);
        for (int s = 0; s < m; ++s) M.at(0, s) = coords[s];
        bases.push_back(std::move(M));
    }
    return make_family(tw, std::move(bases));
}

SubspaceFamily random_family(const Tower& tw, int n, int r, Rng& rng) {
    const int m = tw.m();
    if (r < 1 || r > m)
        throw std::invalid_argument("subspace dimension must lie in 1..m");
    std::vector<Mat> bases;
    bases.reserve(n);
    for (int i = 0; i < n; ++i) {
        Mat M(tw.mid(), r, m);
        do {
            for (fe& x : M.a) x = rng.elem(tw.mid());
        } while (rank(M) < r);
        bases.push_back(std::move(M));
    }
    return make_family(tw, std::move(bases));
}

LinearCode s_u(const LinearCode& C, const std::vector<int>& u) {
    check_tuple(C, u);
    const int m = C.G.F.tw->m();
    BlockCode img = q_ary_image(C);
    LinearCode image = make_code(img.G);
    return shorten(image, dropped_columns(u, m));
}

LinearCode p_u(const LinearCode& C, const std::vector<int>& u) {
    check_tuple(C, u);
    const int m = C.G.F.tw->m();
    BlockCode img = q_ary_image(C);
    LinearCode image = make_code(img.G);
    return puncture(image, dropped_columns(u, m));
}

Mat gss_algorithm1(const LinearCode& C, const std::vector<int>& u) {
    check_tuple(C, u);
    const int m = C.G.F.tw->m();
    Mat M = q_ary_image(C).G;
    Mat H = right_kernel(M);
    Mat Hk = select_columns(H, kept_columns(u, m));
    RrefResult rr = rref(Hk);
    Mat Hr = nonzero_rows(rr.R);
    Hr.F = Hk.F;
    Hr.cols = Hk.cols;
    return right_kernel(Hr);
}

LinearCode gss_algorithm2(const LinearCode& C, const MonomialIsometry& mon) {
    const Tower& tw = *C.G.F.tw;
    const int n = C.n(), m = tw.m();
    if (static_cast<int>(mon.perm.size()) != n || static_cast<int>(mon.f.size()) != n)
        throw std::invalid_argument("isometry size does not match the code");
    check_permutation(mon.perm, n);
    Mat H = right_kernel(q_ary_image(C).G);
    std::vector<Mat> cols;
    cols.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (rank(mon.f[i]) != m) throw std::invalid_argument("singular block map");
        Mat fstar = transpose(invert(mon.f[i]));
        // (H block i) * f*_i, first column only
        Mat c(H.F, H.rows, 1);
        for (int row = 0; row < H.rows; ++row) {
            fe acc = 0;
            for (int s = 0; s < m; ++s)
                acc = H.F.add(acc, H.F.mul(H.at(row, i * m + s), fstar.at(s, 0)));
            c.at(row, 0) = acc;
        }
        cols.push_back(std::move(c));
    }
    return code_from_block_columns(H, cols, mon.perm);
}

Mat gss_algorithm2_reference(const LinearCode& C, const MonomialIsometry& mon) {
    const Tower& tw = *C.G.F.tw;
    const int n = C.n(), m = tw.m();
    if (static_cast<int>(mon.f.size()) != n)
        throw std::invalid_argument("isometry size does not match the code");
    check_permutation(mon.perm, n);
    Mat M = q_ary_image(C).G;
    Mat Mp(M.F, M.rows, M.cols);
    for (int i = 0; i < n; ++i) {
        if (rank(mon.f[i]) != m) throw std::invalid_argument("singular block map");
        for (int row = 0; row < M.rows; ++row)
            for (int t = 0; t < m; ++t) {
                fe acc = 0;
                for (int s = 0; s < m; ++s)
                    acc = M.F.add(acc, M.F.mul(M.at(row, i * m + s), mon.f[i].at(s, t)));
                Mp.at(row, i * m + t) = acc;
            }
    }
    Mat Hp = right_kernel(Mp);
    std::vector<int> first_cols(n);
    for (int i = 0; i < n; ++i) first_cols[i] = i * m;
    Mat Hk = select_columns(Hp, first_cols);
    Mat Hperm(Hk.F, Hk.rows, n);
    for (int i = 0; i < n; ++i)
        for (int row = 0; row < Hk.rows; ++row)
            Hperm.at(row, mon.perm[i]) = Hk.at(row, i);
    RrefResult rr = rref(Hperm);
    Mat Hr = nonzero_rows(rr.R);
    Hr.F = Hperm.F;
    Hr.cols = n;
    return right_kernel(Hr);
}

LinearCode gss_algorithm3(const LinearCode& C, const std::vector<int>& pi,
                          const std::vector<fe>& y) {
    const Tower& tw = *C.G.F.tw;
    const int n = C.n(), m = tw.m();
    if (static_cast<int>(y.size()) != n)
        throw std::invalid_argument("need one element per position");
    check_permutation(pi, n);
    Mat H = right_kernel(q_ary_image(C).G);
    std::vector<Mat> cols;
    cols.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (y[i] == 0) throw std::invalid_argument("spanning elements must be nonzero");
        std::vector<fe> coords = tw.phi(y[i]);
        Mat c(H.F, H.rows, 1); // (H block i) * y_i^T
        for (int row = 0; row < H.rows; ++row) {
            fe acc = 0;
            for (int s = 0; s < m; ++s)
                acc = H.F.add(acc, H.F.mul(H.at(row, i * m + s), coords[s]));
            c.at(row, 0) = acc;
        }
        cols.push_back(std::move(c));
    }
    return code_from_block_columns(H, cols, pi);
}

BlockCode subspace_subcode(const LinearCode& C, const Mat& V) {
    const Tower& tw = *C.G.F.tw;
    const int n = C.n(), m = tw.m(), r = V.rows;
    if (V.cols != m || rank(V) != r)
        throw std::invalid_argument("subspace basis must be full rank with m columns");
    Mat CB = complete_basis(V);
    Mat CBinv = invert(CB);
    BlockCode img = q_ary_image(C);
    // move every block to coordinates in the completed basis
    Mat T(img.G.F, img.G.rows, img.G.cols);
    for (int i = 0; i < n; ++i)
        for (int row = 0; row < T.rows; ++row)
            for (int t = 0; t < m; ++t) {
                fe acc = 0;
                for (int s = 0; s < m; ++s)
                    acc = T.F.add(acc, T.F.mul(img.G.at(row, i * m + s), CBinv.at(s, t)));
                T.at(row, i * m + t) = acc;
            }
    std::vector<int> last;
    for (int i = 0; i < n; ++i)
        for (int s = r; s < m; ++s) last.push_back(i * m + s);
    if (last.empty()) return make_block_code(std::move(T), m);
    LinearCode S = shorten(make_code(std::move(T)), last);
    return make_block_code(S.G, r);
}

BlockCode gss_w(const LinearCode& C, const SubspaceFamily& W) {
    check_family(W);
    const int n = C.n(), m = W.tw->m(), r = W.r;
    if (W.n() != n)
        throw std::invalid_argument("family size does not match the code length");
    Mat H = right_kernel(q_ary_image(C).G);
    // H' = H * Diag(M_1^T, ..., M_n^T), built block by block
    Mat Hp(H.F, H.rows, n * r);
    for (int i = 0; i < n; ++i) {
        const Mat& M = W.bases[i];
        for (int row = 0; row < H.rows; ++row)
            for (int t = 0; t < r; ++t) {
                fe acc = 0;
                for (int s = 0; s < m; ++s)
                    acc = H.F.add(acc, H.F.mul(H.at(row, i * m + s), M.at(t, s)));
                Hp.at(row, i * r + t) = acc;
            }
    }
    return make_block_code(right_kernel(Hp), r);
}

std::vector<fe> lift_block_word(const SubspaceFamily& W, const std::vector<fe>& z) {
    const Tower& tw = *W.tw;
    const int n = W.n(), r = W.r, m = tw.m();
    if (static_cast<int>(z.size()) != n * r)
        throw std::invalid_argument("block word length must be n*r");
    std::vector<fe> c(n);
    for (int i = 0; i < n; ++i) {
        std::vector<fe> coords(m, 0);
        const Field& F = tw.mid();
        for (int t = 0; t < r; ++t)
            for (int s = 0; s < m; ++s)
                coords[s] = F.add(coords[s], F.mul(z[i * r + t], W.bases[i].at(t, s)));
        c[i] = tw.phi_inv(coords);
    }
    return c;
}

std::optional<std::vector<fe>> project_to_family(const SubspaceFamily& W,
                                                 const std::vector<fe>& c) {
    const Tower& tw = *W.tw;
    const int n = W.n(), r = W.r;
    if (static_cast<int>(c.size()) != n)
        throw std::invalid_argument("word length must equal the family size");
    std::vector<fe> z(static_cast<std::size_t>(n) * r);
    for (int i = 0; i < n; ++i) {
        auto zi = solve_right(W.bases[i], tw.phi(c[i]));
        if (!zi) return std::nullopt;
        for (int t = 0; t < r; ++t) z[i * r + t] = (*zi)[t];
    }
    return z;
}

GssDecodeResult gss_decode(const GrsSpec& parent, const SubspaceFamily& W,
                           const std::vector<fe>& noisy) {
    GssDecodeResult res;
    if (W.n() != parent.n()) {
        res.reason = "family size does not match the parent code";
        return res;
    }
    DecodeResult dr = decode(parent, lift_block_word(W, noisy));
    if (!dr.ok) {
        res.reason = dr.reason;
        return res;
    }
    res.parent_codeword = dr.codeword;
    auto z = project_to_family(W, dr.codeword);
    if (!z) {
        res.outside_family = true;
        res.reason = "decoded parent word leaves the subspace family";
        return res;
    }
    res.ok = true;
    res.word = std::move(*z);
    return res;
}

} // namespace gss
