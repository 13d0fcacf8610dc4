#include "ordercone/order_space.hpp"

#include <algorithm>

#include "ordercone/errors.hpp"

namespace ordercone {

OrderedSpace validate(std::vector<Vec> generators, std::size_t dim) {
    if (dim == 0) throw InvalidArgumentError("validate: dimension must be positive");
    if (generators.empty()) throw InvalidArgumentError("validate: generator list is empty");
    for (const auto& g : generators)
        if (g.size() != dim)
            throw DimensionMismatchError("validate: generator dimension mismatch");

    OrderedSpace s;
    s.dim = dim;
    s.cone = v_to_h(std::move(generators), dim);
    s.validation.pointed = rank(Mat::from_rows(s.cone.facets, dim)) == dim;
    s.validation.generating = rank(Mat::from_rows(s.cone.generators, dim)) == dim;
    s.validation.preriesz = s.validation.pointed && s.validation.generating;
    if (!s.validation.pointed)
        throw NotPointedError("cone contains a line: X+ ∩ (-X+) != {0}");
    if (!s.validation.generating)
        throw NotGeneratingError("generators do not span the space");
    return s;
}

Vec facet_values(const OrderedSpace& s, const Vec& x) {
    if (x.size() != s.dim) throw DimensionMismatchError("facet_values: dimension mismatch");
    Vec v(s.cone.facets.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = dot(s.cone.facets[i], x);
    return v;
}

bool contains_positive(const OrderedSpace& s, const Vec& x) {
    for (const auto& f : s.cone.facets)
        if (dot(f, x) < 0) return false;
    return true;
}

bool leq(const OrderedSpace& s, const Vec& x, const Vec& y) {
    return contains_positive(s, vec_sub(y, x));
}

HPolyhedron upper_bounds(const OrderedSpace& s, const std::vector<Vec>& A) {
    if (A.empty()) throw InvalidArgumentError("upper_bounds: empty set");
    HPolyhedron P;
    for (const auto& f : s.cone.facets) {
        Rat hi = dot(f, A.front());
        for (std::size_t k = 1; k < A.size(); ++k) hi = std::max(hi, dot(f, A[k]));
        P.add(f, hi);
    }
    return P;
}

HPolyhedron lower_bounds(const OrderedSpace& s, const std::vector<Vec>& A) {
    if (A.empty()) throw InvalidArgumentError("lower_bounds: empty set");
    HPolyhedron P;
    for (const auto& f : s.cone.facets) {
        Rat lo = dot(f, A.front());
        for (std::size_t k = 1; k < A.size(); ++k) lo = std::min(lo, dot(f, A[k]));
        P.add(vec_neg(f), -lo); // f(z) <= lo
    }
    return P;
}

namespace {

Rat solved_value(const LPResult& r, const char* who) {
    if (r.status != LPStatus::optimal)
        throw InternalError(std::string(who) + ": expected a bounded feasible LP");
    return *r.value;
}

// Greatest element of a lower/upper bound polyhedron L with respect to the
// cone order: maximize (minimize) each facet over L, then solve for the
// point attaining all optima simultaneously.
std::optional<Vec> bound_extremum(const OrderedSpace& s, const HPolyhedron& L, Sense sense) {
    const auto& F = s.cone.facets;
    Vec c(F.size());
    for (std::size_t i = 0; i < F.size(); ++i)
        c[i] = solved_value(lp(F[i], sense, L), "bound_extremum");
    auto sol = solve(Mat::from_rows(F, s.dim), c);
    if (!sol.consistent) return std::nullopt;
    return sol.x;
}

} // namespace

std::optional<Vec> infimum(const OrderedSpace& s, const std::vector<Vec>& A) {
    return bound_extremum(s, lower_bounds(s, A), Sense::maximize);
}

std::optional<Vec> supremum(const OrderedSpace& s, const std::vector<Vec>& A) {
    return bound_extremum(s, upper_bounds(s, A), Sense::minimize);
}

namespace {

Rat abs_rat(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Is U_a ⊆ U_b for two upper-bound sets with the full facet list as normals?
// Offsets may be slack, so this is mutual containment by LP, not offset
// comparison. On failure reports a point of U_a outside U_b.
bool ub_contained(const OrderedSpace& s, const Vec& offs_a, const Vec& offs_b,
                  std::optional<Vec>* separator) {
    const auto& F = s.cone.facets;
    HPolyhedron Ua;
    for (std::size_t i = 0; i < F.size(); ++i) Ua.add(F[i], offs_a[i]);
    for (std::size_t j = 0; j < F.size(); ++j) {
        auto r = lp(F[j], Sense::minimize, Ua);
        if (solved_value(r, "ub_contained") < offs_b[j]) {
            if (separator) *separator = r.point;
            return false;
        }
    }
    return true;
}

// Common lower bound of positive x, y lying outside -X+ (so 0 is not the
// greatest lower bound). Exists exactly when a positive pair is
// non-disjoint: some facet has a positive maximum over the lower bounds.
Vec positive_pair_witness(const OrderedSpace& s, const Vec& x, const Vec& y) {
    HPolyhedron L = lower_bounds(s, {x, y});
    const auto& F = s.cone.facets;
    const auto outside_neg_cone = [&](const Vec& w) {
        return std::any_of(F.begin(), F.end(), [&](const Vec& f) { return dot(f, w) > 0; });
    };

    Vec sum(s.dim, Rat(0));
    for (const auto& f : F) sum = vec_add(sum, f);
    auto r = lp(sum, Sense::maximize, L);
    solved_value(r, "witness");
    if (outside_neg_cone(*r.point)) return *r.point;

    for (const auto& f : F) {
        auto rf = lp(f, Sense::maximize, L);
        solved_value(rf, "witness");
        if (outside_neg_cone(*rf.point)) return *rf.point;
    }
    throw InternalError("no lower-bound witness found for a non-disjoint positive pair");
}

} // namespace

DisjointnessVerdict is_disjoint(const OrderedSpace& s, const Vec& x, const Vec& y,
                                DisjointMethod method) {
    if (x.size() != s.dim || y.size() != s.dim)
        throw DimensionMismatchError("is_disjoint: dimension mismatch");

    const Vec fx = facet_values(s, x);
    const Vec fy = facet_values(s, y);
    const std::size_t m = fx.size();

    DisjointnessVerdict v;
    v.method = method;

    std::optional<Vec> separator;
    if (method == DisjointMethod::fast) {
        v.disjoint = true;
        for (std::size_t i = 0; i < m; ++i)
            if (fx[i] * fy[i] != 0) {
                v.disjoint = false;
                break;
            }
    } else {
        // |f_i(x+y)| and |f_i(x-y)| are the natural offsets of the two
        // upper-bound sets ub{x+y, -x-y} and ub{x-y, y-x}.
        Vec o1(m), o2(m);
        for (std::size_t i = 0; i < m; ++i) {
            o1[i] = abs_rat(fx[i] + fy[i]);
            o2[i] = abs_rat(fx[i] - fy[i]);
        }
        v.disjoint = ub_contained(s, o1, o2, &separator) && ub_contained(s, o2, o1, &separator);
    }

    if (!v.disjoint) {
        if (contains_positive(s, x) && contains_positive(s, y)) {
            v.witness = positive_pair_witness(s, x, y);
        } else if (separator) {
            v.witness = separator;
        } else {
            // fast path on a general pair: locate a separating point via the
            // definition to honour the witness contract.
            Vec o1(m), o2(m);
            for (std::size_t i = 0; i < m; ++i) {
                o1[i] = abs_rat(fx[i] + fy[i]);
                o2[i] = abs_rat(fx[i] - fy[i]);
            }
            if (!ub_contained(s, o1, o2, &separator)) {
                v.witness = separator;
            } else {
                ub_contained(s, o2, o1, &separator);
                if (!separator)
                    throw InternalError("fast/oracle disagreement while building a witness");
                v.witness = separator;
            }
        }
    }
    return v;
}

bool is_D_disjoint(const OrderedSpace& s, const Vec& x, const Vec& y) {
    if (!contains_positive(s, x) || !contains_positive(s, y))
        throw NotPositiveError("is_D_disjoint: inputs must lie in X+");
    const Vec fx = facet_values(s, x);
    const Vec fy = facet_values(s, y);
    HPolyhedron p;
    const auto& F = s.cone.facets;
    for (std::size_t i = 0; i < F.size(); ++i) {
        p.add(F[i], Rat(0));              // z in X+
        p.add(vec_neg(F[i]), -fx[i]);     // z <= x
        p.add(vec_neg(F[i]), -fy[i]);     // z <= y
    }
    return polytope_is_zero(p, F);
}

bool is_symmetric_interval_disjoint(const OrderedSpace& s, const Vec& x, const Vec& y) {
    if (!contains_positive(s, x) || !contains_positive(s, y))
        throw NotPositiveError("is_symmetric_interval_disjoint: inputs must lie in X+");
    const Vec fx = facet_values(s, x);
    const Vec fy = facet_values(s, y);
    HPolyhedron p;
    const auto& F = s.cone.facets;
    for (std::size_t i = 0; i < F.size(); ++i) {
        p.add(vec_neg(F[i]), -fx[i]); // z <= x
        p.add(F[i], -fx[i]);          // z >= -x
        p.add(vec_neg(F[i]), -fy[i]); // z <= y
        p.add(F[i], -fy[i]);          // z >= -y
    }
    return polytope_is_zero(p, F);
}

std::vector<Vec> atoms(const OrderedSpace& s) { return s.cone.extreme_rays; }

bool is_atom(const OrderedSpace& s, const Vec& a) {
    if (a.size() != s.dim) throw DimensionMismatchError("is_atom: dimension mismatch");
    if (vec_is_zero(a) || !contains_positive(s, a)) return false;

    std::vector<Vec> active;
    for (const auto& f : s.cone.facets)
        if (dot(f, a) == 0) active.push_back(f);
    const bool extreme = rank(Mat::from_rows(active, s.dim)) + 1 == s.dim;
    if (!extreme) return false;

    // Extreme ray, so a is an atom; [-a,a] must be the segment
    // {t a : -1 <= t <= 1}, i.e. contained in span{a}.
    const Vec fa = facet_values(s, a);
    HPolyhedron box;
    const auto& F = s.cone.facets;
    for (std::size_t i = 0; i < F.size(); ++i) {
        box.add(vec_neg(F[i]), -fa[i]);
        box.add(F[i], -fa[i]);
    }
    Mat ann = nullspace(Mat::from_rows({a}, s.dim));
    for (std::size_t i = 0; i < ann.rows; ++i) {
        auto hi = lp(ann.row(i), Sense::maximize, box);
        auto lo = lp(ann.row(i), Sense::minimize, box);
        if (hi.status != LPStatus::optimal || *hi.value != 0 ||
            lo.status != LPStatus::optimal || *lo.value != 0)
            throw TheoremViolation(
                "extreme ray whose symmetric order interval is not a segment");
    }
    return true;
}

bool subspaces_disjoint(const OrderedSpace& s, const Mat& V_basis, const Mat& W_basis) {
    for (std::size_t i = 0; i < V_basis.rows; ++i)
        for (std::size_t j = 0; j < W_basis.rows; ++j)
            if (!is_disjoint(s, V_basis.row(i), W_basis.row(j), DisjointMethod::oracle).disjoint)
                return false;
    return true;
}

bool subspace_is_directed(const OrderedSpace& s, const Mat& V_basis) {
    Mat basis = row_basis(V_basis);
    if (basis.rows == 0) return true;
    auto sc = cone_subspace_intersection(s.cone, basis);
    return rank(Mat::from_rows(sc.ambient_generators, s.dim)) == basis.rows;
}

bool positive_operator(const OrderedSpace& s, const Mat& P) {
    if (P.rows != s.dim || P.cols != s.dim)
        throw DimensionMismatchError("positive_operator: shape mismatch");
    for (const auto& g : s.cone.generators)
        if (!contains_positive(s, mat_vec(P, g))) return false;
    return true;
}

} // namespace ordercone
