#include "gss/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gss {

namespace {

// Bit-packed elimination for GF(2); rows are arrays of 64-bit words.
struct BitMat {
    int rows = 0, cols = 0, words = 0;
    std::vector<std::uint64_t> w;

    BitMat(int r, int c)
        : rows(r), cols(c), words((c + 63) / 64),
          w(static_cast<std::size_t>(r) * words, 0) {}

    std::uint64_t* row(int i) { return w.data() + static_cast<std::size_t>(i) * words; }
    const std::uint64_t* row(int i) const { return w.data() + static_cast<std::size_t>(i) * words; }
    bool get(int i, int j) const { return (row(i)[j >> 6] >> (j & 63)) & 1; }
    void set(int i, int j) { row(i)[j >> 6] |= 1ull << (j & 63); }
};

BitMat pack(const Mat& M) {
    BitMat b(M.rows, M.cols);
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j)
            if (M.at(i, j)) b.set(i, j);
    return b;
}

Mat unpack(const Field& F, const BitMat& b, int rows) {
    Mat M(F, rows, b.cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < b.cols; ++j)
            if (b.get(i, j)) M.at(i, j) = 1;
    return M;
}

void rref_bits(BitMat& b, int& rank_out, std::vector<int>& pivots) {
    int row = 0;
    pivots.clear();
    for (int col = 0; col < b.cols && row < b.rows; ++col) {
        int piv = -1;
        for (int i = row; i < b.rows; ++i)
            if (b.get(i, col)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int k = 0; k < b.words; ++k)
                std::swap(b.row(piv)[k], b.row(row)[k]);
        const std::uint64_t* src = b.row(row);
        for (int i = 0; i < b.rows; ++i) {
            if (i == row || !b.get(i, col)) continue;
            std::uint64_t* dst = b.row(i);
            for (int k = 0; k < b.words; ++k) dst[k] ^= src[k];
        }
        pivots.push_back(col);
        ++row;
    }
    rank_out = row;
}

RrefResult rref_f2(const Mat& M) {
    BitMat b = pack(M);
    RrefResult res;
    rref_bits(b, res.rank, res.pivots);
    res.R = unpack(M.F, b, M.rows);
    return res;
}

RrefResult rref_generic(const Mat& M) {
    RrefResult res;
    res.R = M;
    Mat& R = res.R;
    const Field& F = M.F;
    int row = 0;
    for (int col = 0; col < R.cols && row < R.rows; ++col) {
        int piv = -1;
        for (int i = row; i < R.rows; ++i)
            if (R.at(i, col)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < R.cols; ++j) std::swap(R.at(piv, j), R.at(row, j));
        fe il = F.inv(R.at(row, col));
        if (il != 1)
            for (int j = 0; j < R.cols; ++j) R.at(row, j) = F.mul(R.at(row, j), il);
        for (int i = 0; i < R.rows; ++i) {
            if (i == row) continue;
            fe c = R.at(i, col);
            if (!c) continue;
            for (int j = 0; j < R.cols; ++j)
                R.at(i, j) = F.sub(R.at(i, j), F.mul(c, R.at(row, j)));
        }
        res.pivots.push_back(col);
        ++row;
    }
    res.rank = row;
    return res;
}

} // namespace

Mat Mat::identity(Field f, int n) {
    Mat I(f, n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

Mat Mat::from_rows(Field f, const std::vector<std::vector<fe>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Mat M(f, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("ragged rows");
        for (int j = 0; j < c; ++j) M.at(i, j) = rows[i][j];
    }
    return M;
}

RrefResult rref(const Mat& M) {
    return M.F.size() == 2 ? rref_f2(M) : rref_generic(M);
}

int rank(const Mat& M) {
    if (M.F.size() == 2) {
        BitMat b = pack(M);
        int r;
        std::vector<int> piv;
        rref_bits(b, r, piv);
        return r;
    }
    return rref_generic(M).rank;
}

Mat right_kernel(const Mat& M) {
    RrefResult rr = rref(M);
    const Field& F = M.F;
    std::vector<char> is_pivot(M.cols, 0);
    for (int c : rr.pivots) is_pivot[c] = 1;
    Mat K(F, M.cols - rr.rank, M.cols);
    int out = 0;
    for (int c = 0; c < M.cols; ++c) {
        if (is_pivot[c]) continue;
        K.at(out, c) = 1;
        for (int i = 0; i < rr.rank; ++i)
            K.at(out, rr.pivots[i]) = F.neg(rr.R.at(i, c));
        ++out;
    }
    return K;
}

SystematicResult systematic_form(const Mat& G) {
    RrefResult rr = rref(G);
    if (rr.rank != G.rows)
        throw std::invalid_argument("generator is rank-deficient");
    SystematicResult res;
    res.col_order.resize(G.cols);
    bool id = true;
    for (int i = 0; i < rr.rank; ++i)
        if (rr.pivots[i] != i) id = false;
    if (id) {
        res.G = std::move(rr.R);
        for (int j = 0; j < G.cols; ++j) res.col_order[j] = j;
        res.permuted = false;
        return res;
    }
    std::vector<char> is_pivot(G.cols, 0);
    for (int c : rr.pivots) is_pivot[c] = 1;
    std::vector<int> order = rr.pivots;
    for (int j = 0; j < G.cols; ++j)
        if (!is_pivot[j]) order.push_back(j);
    res.G = select_columns(rr.R, order);
    res.col_order = std::move(order);
    res.permuted = true;
    return res;
}

bool row_space_equal(const Mat& A, const Mat& B) {
    if (A.cols != B.cols || A.F != B.F) return false;
    RrefResult ra = rref(A), rb = rref(B);
    if (ra.rank != rb.rank) return false;
    for (int i = 0; i < ra.rank; ++i)
        for (int j = 0; j < A.cols; ++j)
            if (ra.R.at(i, j) != rb.R.at(i, j)) return false;
    return true;
}

Mat mul(const Mat& A, const Mat& B) {
    if (A.cols != B.rows) throw std::invalid_argument("shape mismatch");
    const Field& F = A.F;
    Mat C(F, A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            fe v = A.at(i, k);
            if (!v) continue;
            if (v == 1) {
                for (int j = 0; j < B.cols; ++j)
                    C.at(i, j) = F.add(C.at(i, j), B.at(k, j));
            } else {
                for (int j = 0; j < B.cols; ++j)
                    C.at(i, j) = F.add(C.at(i, j), F.mul(v, B.at(k, j)));
            }
        }
    return C;
}

Mat transpose(const Mat& A) {
    Mat T(A.F, A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

Mat vstack(const Mat& A, const Mat& B) {
    if (A.rows == 0) return B;
    if (B.rows == 0) return A;
    if (A.cols != B.cols || A.F != B.F)
        throw std::invalid_argument("shape mismatch");
    Mat C(A.F, A.rows + B.rows, A.cols);
    std::copy(A.a.begin(), A.a.end(), C.a.begin());
    std::copy(B.a.begin(), B.a.end(), C.a.begin() + A.a.size());
    return C;
}

Mat select_columns(const Mat& A, const std::vector<int>& cols) {
    Mat C(A.F, A.rows, static_cast<int>(cols.size()));
    for (int i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            C.at(i, static_cast<int>(j)) = A.at(i, cols[j]);
    return C;
}

Mat delete_columns(const Mat& A, const std::vector<int>& cols) {
    std::vector<char> drop(A.cols, 0);
    for (int c : cols) drop[c] = 1;
    std::vector<int> keep;
    for (int j = 0; j < A.cols; ++j)
        if (!drop[j]) keep.push_back(j);
    return select_columns(A, keep);
}

Mat nonzero_rows(const Mat& A) {
    std::vector<std::vector<fe>> rows;
    for (int i = 0; i < A.rows; ++i) {
        bool nz = false;
        for (int j = 0; j < A.cols; ++j)
            if (A.at(i, j)) { nz = true; break; }
        if (nz)
            rows.emplace_back(A.a.begin() + static_cast<std::size_t>(i) * A.cols,
                              A.a.begin() + static_cast<std::size_t>(i + 1) * A.cols);
    }
    Mat M = Mat::from_rows(A.F, rows);
    M.cols = A.cols; // preserve width for empty results
    if (rows.empty()) M.F = A.F;
    return M;
}

std::vector<fe> mul_row(const std::vector<fe>& x, const Mat& A) {
    if (static_cast<int>(x.size()) != A.rows)
        throw std::invalid_argument("shape mismatch");
    const Field& F = A.F;
    std::vector<fe> y(A.cols, 0);
    for (int k = 0; k < A.rows; ++k) {
        fe v = x[k];
        if (!v) continue;
        for (int j = 0; j < A.cols; ++j)
            y[j] = F.add(y[j], F.mul(v, A.at(k, j)));
    }
    return y;
}

Mat invert(const Mat& A) {
    if (A.rows != A.cols) throw std::invalid_argument("not square");
    Mat ext(A.F, A.rows, 2 * A.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) ext.at(i, j) = A.at(i, j);
        ext.at(i, A.cols + i) = 1;
    }
    RrefResult rr = rref(ext);
    if (rr.rank != A.rows || rr.pivots.back() >= A.cols)
        throw std::invalid_argument("matrix is singular");
    std::vector<int> right(A.cols);
    for (int j = 0; j < A.cols; ++j) right[j] = A.cols + j;
    return select_columns(rr.R, right);
}

Mat mult_matrix(const Tower& tw, fe beta) {
    Mat M(tw.mid(), static_cast<int>(tw.m()), static_cast<int>(tw.m()));
    for (std::uint32_t i = 0; i < tw.m(); ++i) {
        std::vector<fe> row = tw.phi(tw.top().mul(tw.basis()[i], beta));
        for (std::uint32_t j = 0; j < tw.m(); ++j) M.at(i, j) = row[j];
    }
    return M;
}

Mat complete_basis(const Mat& V) {
    const int r = V.rows, m = V.cols;
    if (rank(V) != r) throw std::invalid_argument("rows are dependent");
    Mat cur = V;
    for (int j = 0; j < m && cur.rows < m; ++j) {
        Mat cand(V.F, cur.rows + 1, m);
        std::copy(cur.a.begin(), cur.a.end(), cand.a.begin());
        cand.at(cur.rows, j) = 1;
        if (rank(cand) == cand.rows) cur = std::move(cand);
    }
    if (cur.rows != m) throw std::logic_error("completion failed");
    return cur;
}

} // namespace gss
