#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ordercone/rational.hpp"

namespace ordercone {

// Dense row-major matrix over Q. Small: everything in this library lives at
// desk scale (dim <= 8, a few dozen rows).
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rat> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    Vec row(std::size_t i) const {
        return Vec(a.begin() + static_cast<std::ptrdiff_t>(i * cols),
                   a.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
    }
    void set_row(std::size_t i, const Vec& v) {
        for (std::size_t j = 0; j < cols; ++j) at(i, j) = v[j];
    }
    std::vector<Vec> to_rows() const {
        std::vector<Vec> out;
        out.reserve(rows);
        for (std::size_t i = 0; i < rows; ++i) out.push_back(row(i));
        return out;
    }

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t r, std::size_t c) { return Mat(r, c); }
    static Mat from_rows(const std::vector<Vec>& rs, std::size_t ncols);

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

Mat mat_mul(const Mat& A, const Mat& B);
Vec mat_vec(const Mat& A, const Vec& x);
Mat transpose(const Mat& A);
Mat mat_add(const Mat& A, const Mat& B);
Mat mat_sub(const Mat& A, const Mat& B);
Mat stack_rows(const Mat& A, const Mat& B);
bool mat_is_zero(const Mat& A);

// In-place reduced row echelon form. Returns the pivot column of each pivot
// row; rows beyond the returned count are zero.
std::vector<std::size_t> rref_inplace(Mat& M);

std::size_t rank(const Mat& M);

struct SolveResult {
    bool consistent = false;
    Vec x; // valid iff consistent; free variables set to zero in pivot order
};

// One exact solution of M x = b, or inconsistency.
SolveResult solve(const Mat& M, const Vec& b);

// Canonical basis of {x : Mx = 0}, returned as rows in reduced echelon form
// so that equal subspaces produce identical matrices.
Mat nullspace(const Mat& M);

// Canonical basis of the row space (RREF, zero rows dropped).
Mat row_basis(const Mat& M);

bool same_subspace(const Mat& A, const Mat& B);
bool subspace_contains(const Mat& basis, const Vec& v);
bool subspace_contains_all(const Mat& basis, const Mat& rows);

// Canonical basis of span(A) + span(B).
Mat subspace_sum(const Mat& A, const Mat& B);
// Canonical basis of span(A) ∩ span(B).
Mat subspace_intersection(const Mat& A, const Mat& B);

// Inverse of a square matrix; nullopt when singular.
std::optional<Mat> inverse(const Mat& A);

// Projection onto rowspace(U) along rowspace(W). The stacked rows must form
// a basis of the whole space.
Mat projection_onto(const Mat& U, const Mat& W);

// Deterministic lexicographic order on matrices (row count, then rows).
bool mat_less(const Mat& A, const Mat& B);

} // namespace ordercone
