#include "ordercone/polyhedra.hpp"

#include <algorithm>

#include "ordercone/errors.hpp"

// Exact two-phase simplex with Bland's rule on the standard form
//   min c.z  s.t.  A z = b, z >= 0.
// Bland's pivoting rule guarantees termination; everything is rational, so
// the returned points, values, and dual vectors are exact and re-verified
// before they leave this translation unit.

namespace ordercone {
namespace {

struct StdSimplexResult {
    LPStatus status = LPStatus::infeasible;
    Vec z;     // optimal: solution; unbounded: feasible point
    Rat value; // optimal objective value
    Vec ray;   // unbounded: improving direction in z-space
    Vec dual;  // optimal: y with y.A_j <= c_j, y.b = value
               // infeasible: Farkas y with y.A_j <= 0, y.b > 0
};

class StandardSimplex {
public:
    StandardSimplex(const Mat& A_in, const Vec& b_in, const Vec& c_in)
        : m_(A_in.rows), n_(A_in.cols), c_(c_in) {
        if (b_in.size() != m_ || c_in.size() != n_)
            throw DimensionMismatchError("simplex: shape mismatch");
        // Flip rows so the RHS is nonnegative; remember signs for the duals.
        A_ = A_in;
        b_ = b_in;
        sigma_.assign(m_, Rat(1));
        for (std::size_t i = 0; i < m_; ++i) {
            if (b_[i] < 0) {
                sigma_[i] = -1;
                b_[i] = -b_[i];
                for (std::size_t j = 0; j < n_; ++j) A_.at(i, j) = -A_.at(i, j);
            }
        }
    }

    StdSimplexResult run() {
        setup_phase1();
        iterate(/*phase1=*/true);
        StdSimplexResult res;
        if (obj_val_ > 0) {
            res.status = LPStatus::infeasible;
            res.dual = extract_dual(/*phase1=*/true);
            verify_farkas(res.dual);
            return res;
        }
        drive_out_artificials();
        setup_phase2();
        bool bounded = iterate(/*phase1=*/false);
        if (!bounded) {
            res.status = LPStatus::unbounded;
            res.z = primal_point();
            res.ray = ray_;
            verify_ray(res.z, res.ray);
            return res;
        }
        res.status = LPStatus::optimal;
        res.z = primal_point();
        res.value = obj_val_;
        res.dual = extract_dual(/*phase1=*/false);
        verify_optimal(res.z, res.value, res.dual);
        return res;
    }

private:
    std::size_t m_, n_;
    Mat A_;  // original (sign-flipped) rows, real columns only
    Vec b_;
    Vec c_;
    std::vector<Rat> sigma_;

    // Tableau over surviving rows; columns 0..n_-1 real, n_..n_+m_-1
    // artificial, last column RHS.
    Mat T_;
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> row_ids_; // surviving original row indices
    Vec obj_row_;
    Rat obj_val_;
    Vec ray_;

    std::size_t ncols() const { return n_ + m_; }

    bool is_artificial(std::size_t j) const { return j >= n_; }

    void setup_phase1() {
        T_ = Mat(m_, ncols() + 1);
        basis_.resize(m_);
        row_ids_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) T_.at(i, j) = A_.at(i, j);
            T_.at(i, n_ + i) = 1;
            T_.at(i, ncols()) = b_[i];
            basis_[i] = n_ + i;
            row_ids_[i] = i;
        }
        obj_row_.assign(ncols(), Rat(0));
        obj_val_ = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) obj_row_[j] -= T_.at(i, j);
            obj_val_ += T_.at(i, ncols());
        }
    }

    void setup_phase2() {
        obj_row_.assign(ncols(), Rat(0));
        for (std::size_t j = 0; j < n_; ++j) obj_row_[j] = c_[j];
        obj_val_ = 0;
        for (std::size_t i = 0; i < T_.rows; ++i) {
            const std::size_t bj = basis_[i];
            const Rat cb = bj < n_ ? c_[bj] : Rat(0);
            if (cb == 0) continue;
            for (std::size_t j = 0; j < ncols(); ++j) obj_row_[j] -= cb * T_.at(i, j);
            obj_val_ += cb * T_.at(i, ncols());
        }
    }

    void pivot(std::size_t r, std::size_t col) {
        const Rat inv = Rat(1) / T_.at(r, col);
        for (std::size_t j = 0; j <= ncols(); ++j) T_.at(r, j) *= inv;
        for (std::size_t i = 0; i < T_.rows; ++i) {
            if (i == r) continue;
            const Rat f = T_.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = 0; j <= ncols(); ++j) T_.at(i, j) -= f * T_.at(r, j);
        }
        const Rat f = obj_row_[col];
        if (f != 0) {
            for (std::size_t j = 0; j < ncols(); ++j) obj_row_[j] -= f * T_.at(r, j);
            obj_val_ += f * T_.at(r, ncols());
        }
        basis_[r] = col;
    }

    // Returns false when unbounded (phase 2 only); fills ray_ in that case.
    bool iterate(bool phase1) {
        for (;;) {
            // Bland: entering column = smallest index with negative reduced
            // cost; artificials never re-enter in phase 2.
            std::size_t enter = ncols();
            for (std::size_t j = 0; j < ncols(); ++j) {
                if (!phase1 && is_artificial(j)) continue;
                if (obj_row_[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == ncols()) return true;

            std::size_t leave = T_.rows;
            Rat best_ratio = 0;
            for (std::size_t i = 0; i < T_.rows; ++i) {
                if (T_.at(i, enter) <= 0) continue;
                Rat ratio = T_.at(i, ncols()) / T_.at(i, enter);
                if (leave == T_.rows || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == T_.rows) {
                if (phase1)
                    throw InternalError("phase-1 objective is bounded by construction");
                ray_.assign(ncols(), Rat(0));
                ray_[enter] = 1;
                for (std::size_t i = 0; i < T_.rows; ++i)
                    ray_[basis_[i]] = -T_.at(i, enter);
                return false;
            }
            pivot(leave, enter);
        }
    }

    void drive_out_artificials() {
        for (std::size_t i = 0; i < T_.rows;) {
            if (!is_artificial(basis_[i])) {
                ++i;
                continue;
            }
            std::size_t col = ncols();
            for (std::size_t j = 0; j < n_; ++j) {
                if (T_.at(i, j) != 0) {
                    col = j;
                    break;
                }
            }
            if (col < ncols()) {
                pivot(i, col); // RHS is zero here, so feasibility is kept
                ++i;
            } else {
                // Row is redundant: drop it.
                drop_row(i);
            }
        }
    }

    void drop_row(std::size_t r) {
        Mat nt(T_.rows - 1, T_.cols);
        std::size_t k = 0;
        for (std::size_t i = 0; i < T_.rows; ++i) {
            if (i == r) continue;
            for (std::size_t j = 0; j < T_.cols; ++j) nt.at(k, j) = T_.at(i, j);
            ++k;
        }
        T_ = nt;
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
        row_ids_.erase(row_ids_.begin() + static_cast<std::ptrdiff_t>(r));
    }

    Vec primal_point() const {
        Vec z(ncols(), Rat(0));
        for (std::size_t i = 0; i < T_.rows; ++i) z[basis_[i]] = T_.at(i, ncols());
        return z;
    }

    // Solve B^T y = c_B over the surviving rows from the original data, then
    // spread to all m rows (dropped rows get 0) and undo the sign flips.
    Vec extract_dual(bool phase1) const {
        const std::size_t k = T_.rows;
        Mat Bt(k, k);
        Vec cb(k);
        for (std::size_t col = 0; col < k; ++col) {
            const std::size_t bj = basis_[col];
            for (std::size_t i = 0; i < k; ++i) {
                const std::size_t orig = row_ids_[i];
                Rat entry;
                if (bj < n_)
                    entry = A_.at(orig, bj);
                else
                    entry = (n_ + orig == bj) ? Rat(1) : Rat(0);
                Bt.at(col, i) = entry; // transposed on the fly
            }
            if (phase1)
                cb[col] = is_artificial(bj) ? Rat(1) : Rat(0);
            else
                cb[col] = bj < n_ ? c_[bj] : Rat(0);
        }
        auto sol = solve(Bt, cb);
        if (!sol.consistent) throw InternalError("dual system inconsistent");
        Vec y(m_, Rat(0));
        for (std::size_t i = 0; i < k; ++i) y[row_ids_[i]] = sol.x[i];
        for (std::size_t i = 0; i < m_; ++i) y[i] *= sigma_[i];
        return y;
    }

    // All checks below are against the caller's original (unflipped) data.
    Rat orig_col_dot(const Vec& y, std::size_t j) const {
        Rat s = 0;
        for (std::size_t i = 0; i < m_; ++i) s += y[i] * sigma_[i] * A_.at(i, j);
        return s;
    }
    Rat orig_b_dot(const Vec& y) const {
        Rat s = 0;
        for (std::size_t i = 0; i < m_; ++i) s += y[i] * sigma_[i] * b_[i];
        return s;
    }

    void verify_farkas(const Vec& y) const {
        for (std::size_t j = 0; j < n_; ++j)
            if (orig_col_dot(y, j) > 0) throw InternalError("Farkas certificate failed");
        if (orig_b_dot(y) <= 0) throw InternalError("Farkas certificate failed");
    }

    void verify_ray(const Vec& z, const Vec& ray) const {
        check_feasible(z);
        Rat cd = 0;
        for (std::size_t j = 0; j < n_; ++j) cd += c_[j] * ray[j];
        if (cd >= 0) throw InternalError("unbounded ray does not improve");
        for (std::size_t j = 0; j < ncols(); ++j)
            if (is_artificial(j) && ray[j] != 0)
                throw InternalError("ray touches artificial column");
        for (std::size_t i = 0; i < m_; ++i) {
            bool alive = std::find(row_ids_.begin(), row_ids_.end(), i) != row_ids_.end();
            if (!alive) continue;
            Rat s = 0;
            for (std::size_t j = 0; j < n_; ++j) s += A_.at(i, j) * ray[j];
            if (s != 0) throw InternalError("ray leaves the affine hull");
        }
        for (std::size_t j = 0; j < ncols(); ++j)
            if (ray[j] < 0 && std::find(basis_.begin(), basis_.end(), j) == basis_.end())
                throw InternalError("ray negative outside basis");
    }

    void check_feasible(const Vec& z) const {
        for (std::size_t j = 0; j < ncols(); ++j)
            if (z[j] < 0) throw InternalError("negative basic value");
        for (std::size_t i = 0; i < m_; ++i) {
            Rat s = 0;
            for (std::size_t j = 0; j < n_; ++j) s += A_.at(i, j) * z[j];
            if (is_artificial(n_ + i) && z[n_ + i] != 0) s += z[n_ + i];
            if (s != b_[i]) throw InternalError("primal point infeasible");
        }
    }

    void verify_optimal(const Vec& z, const Rat& value, const Vec& y) const {
        check_feasible(z);
        Rat cz = 0;
        for (std::size_t j = 0; j < n_; ++j) cz += c_[j] * z[j];
        if (cz != value) throw InternalError("objective value mismatch");
        for (std::size_t j = 0; j < n_; ++j)
            if (orig_col_dot(y, j) > c_[j]) throw InternalError("dual infeasible");
        if (orig_b_dot(y) != value) throw InternalError("strong duality failed");
    }
};

StdSimplexResult simplex_standard(const Mat& A, const Vec& b, const Vec& c) {
    StandardSimplex s(A, b, c);
    return s.run();
}

} // namespace

LPResult lp(const Vec& objective, Sense sense, const HPolyhedron& P) {
    const std::size_t n = objective.size();
    const std::size_t m = P.normals.size();
    if (P.offsets.size() != m) throw DimensionMismatchError("lp: normals/offsets mismatch");
    for (const auto& row : P.normals)
        if (row.size() != n) throw DimensionMismatchError("lp: constraint dimension mismatch");

    Vec cmin = sense == Sense::maximize ? vec_neg(objective) : objective;

    // z = (x+, x-, s) with N x - s = b, s >= 0.
    const std::size_t ncols = 2 * n + m;
    Mat A(m, ncols);
    Vec b(m);
    Vec c(ncols, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            A.at(i, j) = P.normals[i][j];
            A.at(i, n + j) = -P.normals[i][j];
        }
        A.at(i, 2 * n + i) = -1;
        b[i] = P.offsets[i];
    }
    for (std::size_t j = 0; j < n; ++j) {
        c[j] = cmin[j];
        c[n + j] = -cmin[j];
    }

    auto res = simplex_standard(A, b, c);

    LPResult out;
    if (res.status == LPStatus::infeasible) {
        out.status = LPStatus::infeasible;
        out.certificate = res.dual;
        return out;
    }

    Vec x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = res.z[j] - res.z[n + j];
    for (std::size_t i = 0; i < m; ++i)
        if (dot(P.normals[i], x) < P.offsets[i])
            throw InternalError("lp: point violates a constraint");

    if (res.status == LPStatus::unbounded) {
        Vec d(n);
        for (std::size_t j = 0; j < n; ++j) d[j] = res.ray[j] - res.ray[n + j];
        for (std::size_t i = 0; i < m; ++i)
            if (dot(P.normals[i], d) < 0) throw InternalError("lp: ray leaves the polyhedron");
        if (dot(cmin, d) >= 0) throw InternalError("lp: ray does not improve");
        out.status = LPStatus::unbounded;
        out.point = x;
        out.certificate = d;
        return out;
    }

    out.status = LPStatus::optimal;
    out.point = x;
    out.value = sense == Sense::maximize ? -res.value : res.value;
    out.certificate = res.dual;
    // Strong duality against the original constraint data, exact.
    Rat yb = 0;
    Vec yN(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (res.dual[i] < 0) throw InternalError("lp: negative dual multiplier");
        yb += res.dual[i] * P.offsets[i];
        for (std::size_t j = 0; j < n; ++j) yN[j] += res.dual[i] * P.normals[i][j];
    }
    if (yN != cmin || yb != res.value) throw InternalError("lp: duality certificate failed");
    return out;
}

bool cone_member(const std::vector<Vec>& generators, const Vec& x) {
    const std::size_t n = x.size();
    std::vector<Vec> gens;
    for (const auto& g : generators) {
        if (g.size() != n) throw DimensionMismatchError("cone_member: dimension mismatch");
        if (!vec_is_zero(g)) gens.push_back(g);
    }
    if (gens.empty()) return vec_is_zero(x);
    Mat A(n, gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) A.at(i, j) = gens[j][i];
    Vec c(gens.size(), Rat(0));
    auto res = simplex_standard(A, x, c);
    return res.status == LPStatus::optimal;
}

} // namespace ordercone
