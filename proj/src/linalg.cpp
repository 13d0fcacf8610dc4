#include "ordercone/linalg.hpp"

#include <algorithm>

namespace ordercone {

Mat Mat::identity(std::size_t n) {
    Mat I(n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

Mat Mat::from_rows(const std::vector<Vec>& rs, std::size_t ncols) {
    Mat M(rs.size(), ncols);
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (rs[i].size() != ncols)
            throw DimensionMismatchError("from_rows: row length mismatch");
        M.set_row(i, rs[i]);
    }
    return M;
}

Mat mat_mul(const Mat& A, const Mat& B) {
    if (A.cols != B.rows) throw DimensionMismatchError("mat_mul: shape mismatch");
    Mat C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            const Rat& aik = A.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < B.cols; ++j)
                C.at(i, j) += aik * B.at(k, j);
        }
    return C;
}

Vec mat_vec(const Mat& A, const Vec& x) {
    if (A.cols != x.size()) throw DimensionMismatchError("mat_vec: shape mismatch");
    Vec y(A.rows);
    for (std::size_t i = 0; i < A.rows; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < A.cols; ++j) s += A.at(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

Mat transpose(const Mat& A) {
    Mat T(A.cols, A.rows);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

Mat mat_add(const Mat& A, const Mat& B) {
    if (A.rows != B.rows || A.cols != B.cols)
        throw DimensionMismatchError("mat_add: shape mismatch");
    Mat C(A.rows, A.cols);
    for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.a[i] + B.a[i];
    return C;
}

Mat mat_sub(const Mat& A, const Mat& B) {
    if (A.rows != B.rows || A.cols != B.cols)
        throw DimensionMismatchError("mat_sub: shape mismatch");
    Mat C(A.rows, A.cols);
    for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.a[i] - B.a[i];
    return C;
}

Mat stack_rows(const Mat& A, const Mat& B) {
    if (A.rows == 0) return B;
    if (B.rows == 0) return A;
    if (A.cols != B.cols) throw DimensionMismatchError("stack_rows: width mismatch");
    Mat C(A.rows + B.rows, A.cols);
    std::copy(A.a.begin(), A.a.end(), C.a.begin());
    std::copy(B.a.begin(), B.a.end(), C.a.begin() + static_cast<std::ptrdiff_t>(A.a.size()));
    return C;
}

bool mat_is_zero(const Mat& A) {
    return std::all_of(A.a.begin(), A.a.end(), [](const Rat& x) { return x == 0; });
}

std::vector<std::size_t> rref_inplace(Mat& M) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols && r < M.rows; ++c) {
        std::size_t p = r;
        while (p < M.rows && M.at(p, c) == 0) ++p;
        if (p == M.rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < M.cols; ++j) std::swap(M.at(p, j), M.at(r, j));
        const Rat inv = Rat(1) / M.at(r, c);
        for (std::size_t j = c; j < M.cols; ++j) M.at(r, j) *= inv;
        for (std::size_t i = 0; i < M.rows; ++i) {
            if (i == r) continue;
            const Rat f = M.at(i, c);
            if (f == 0) continue;
            for (std::size_t j = c; j < M.cols; ++j) M.at(i, j) -= f * M.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const Mat& M) {
    Mat T = M;
    return rref_inplace(T).size();
}

SolveResult solve(const Mat& M, const Vec& b) {
    if (b.size() != M.rows)
        throw DimensionMismatchError("solve: rhs length must equal row count");
    Mat aug(M.rows, M.cols + 1);
    for (std::size_t i = 0; i < M.rows; ++i) {
        for (std::size_t j = 0; j < M.cols; ++j) aug.at(i, j) = M.at(i, j);
        aug.at(i, M.cols) = b[i];
    }
    auto pivots = rref_inplace(aug);
    SolveResult res;
    if (!pivots.empty() && pivots.back() == M.cols) return res; // pivot in rhs column
    res.consistent = true;
    res.x.assign(M.cols, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) res.x[pivots[r]] = aug.at(r, M.cols);
    return res;
}

Mat nullspace(const Mat& M) {
    Mat R = M;
    auto pivots = rref_inplace(R);
    std::vector<bool> is_pivot(M.cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t f = 0; f < M.cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(M.cols, Rat(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -R.at(r, f);
        basis.push_back(std::move(v));
    }
    // Re-reduce so equal subspaces yield identical bases regardless of how
    // they were produced.
    return row_basis(Mat::from_rows(basis, M.cols));
}

Mat row_basis(const Mat& M) {
    Mat R = M;
    auto pivots = rref_inplace(R);
    Mat B(pivots.size(), M.cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < M.cols; ++j) B.at(i, j) = R.at(i, j);
    return B;
}

bool same_subspace(const Mat& A, const Mat& B) {
    if (A.cols != B.cols) return false;
    return row_basis(A) == row_basis(B);
}

bool subspace_contains(const Mat& basis, const Vec& v) {
    if (vec_is_zero(v)) return true;
    Mat with = stack_rows(basis, Mat::from_rows({v}, v.size()));
    return rank(with) == rank(basis);
}

bool subspace_contains_all(const Mat& basis, const Mat& rows) {
    Mat with = stack_rows(basis, rows);
    return rank(with) == rank(basis);
}

Mat subspace_sum(const Mat& A, const Mat& B) { return row_basis(stack_rows(A, B)); }

Mat subspace_intersection(const Mat& A, const Mat& B) {
    // (V ∩ W) = annihilator of (V° + W°)
    if (A.cols != B.cols) throw DimensionMismatchError("subspace_intersection: width mismatch");
    Mat annA = nullspace(A);
    Mat annB = nullspace(B);
    return nullspace(stack_rows(annA, annB));
}

std::optional<Mat> inverse(const Mat& A) {
    if (A.rows != A.cols) return std::nullopt;
    const std::size_t n = A.rows;
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = rref_inplace(aug);
    // [A | I] always has rank n; A is invertible iff every pivot lands in the
    // left block.
    if (pivots.size() != n || pivots.back() >= n) return std::nullopt;
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

Mat projection_onto(const Mat& U, const Mat& W) {
    const std::size_t n = U.rows ? U.cols : W.cols;
    if (U.rows + W.rows != n)
        throw DimensionMismatchError("projection_onto: ranges do not complement");
    if (U.rows == 0) return Mat::zero(n, n);
    Mat M = transpose(stack_rows(U, W)); // columns are the combined basis
    auto Minv = inverse(M);
    if (!Minv) throw DimensionMismatchError("projection_onto: bases are not complementary");
    Mat top(U.rows, n);
    for (std::size_t i = 0; i < U.rows; ++i)
        for (std::size_t j = 0; j < n; ++j) top.at(i, j) = Minv->at(i, j);
    return mat_mul(transpose(U), top);
}

bool mat_less(const Mat& A, const Mat& B) {
    if (A.rows != B.rows) return A.rows < B.rows;
    if (A.cols != B.cols) return A.cols < B.cols;
    for (std::size_t i = 0; i < A.a.size(); ++i) {
        if (A.a[i] != B.a[i]) return A.a[i] < B.a[i];
    }
    return false;
}

} // namespace ordercone
