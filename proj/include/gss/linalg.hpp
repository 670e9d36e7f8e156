#pragma once

#include "gss/galois.hpp"

#include <initializer_list>
#include <vector>

namespace gss {

// Dense row-major matrix over one field level.
struct Mat {
    Field F{};
    int rows = 0, cols = 0;
    std::vector<fe> a;

    Mat() = default;
    Mat(Field f, int r, int c)
        : F(f), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    fe& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    fe at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static Mat identity(Field f, int n);
    static Mat from_rows(Field f, const std::vector<std::vector<fe>>& rows);

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a && F == o.F;
    }
    bool is_zero() const {
        for (fe v : a)
            if (v) return false;
        return true;
    }
};

struct RrefResult {
    Mat R;
    int rank = 0;
    std::vector<int> pivots;
};

// Reduced row echelon form (canonical; deterministic leftmost pivots).
RrefResult rref(const Mat& M);
int rank(const Mat& M);

// Rows span { x : M x^T = 0 }; row count = cols - rank(M).
Mat right_kernel(const Mat& M);

struct SystematicResult {
    Mat G;                      // [I | A] in the returned column order
    std::vector<int> col_order; // col_order[j] = source column at position j
    bool permuted = false;
};

// Requires full row rank; permutes columns only when the leading block is
// singular, choosing the leftmost independent columns.
SystematicResult systematic_form(const Mat& G);

bool row_space_equal(const Mat& A, const Mat& B);

Mat mul(const Mat& A, const Mat& B);
Mat transpose(const Mat& A);
Mat vstack(const Mat& A, const Mat& B);
Mat select_columns(const Mat& A, const std::vector<int>& cols);
Mat delete_columns(const Mat& A, const std::vector<int>& cols);
Mat nonzero_rows(const Mat& A);
std::vector<fe> mul_row(const std::vector<fe>& x, const Mat& A); // x * A
Mat invert(const Mat& A); // square, invertible

// m x m matrix of multiplication by beta in the tower's basis:
// phi(x * beta) = phi(x) * M_beta, entries over GF(q).
Mat mult_matrix(const Tower& tw, fe beta);

// Extends a full-rank r x m matrix over GF(q) to an invertible m x m matrix
// whose first r rows are the input rows.
Mat complete_basis(const Mat& V);

} // namespace gss
