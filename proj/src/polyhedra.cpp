#include "ordercone/polyhedra.hpp"

#include <algorithm>
#include <set>

#include "ordercone/errors.hpp"

namespace ordercone {

Vec canonical_ray(const Vec& v) {
    Int lcm_den = 1;
    for (const auto& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
    Int g = 0;
    std::vector<Int> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(ints[i]));
    }
    if (g == 0) return Vec(v.size(), Rat(0));
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(ints[i] / g);
    return out;
}

namespace {

std::vector<Vec> canonical_unique_rows(const std::vector<Vec>& rows_in, std::size_t dim) {
    std::vector<Vec> rows;
    for (const auto& r : rows_in) {
        if (r.size() != dim)
            throw DimensionMismatchError("constraint row has wrong dimension");
        if (!vec_is_zero(r)) rows.push_back(canonical_ray(r));
    }
    std::sort(rows.begin(), rows.end(), vec_less);
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

// Extreme rays of the pointed cone {y : rows[i] . y >= 0} in Q^k,
// rank(rows) = k. Classic double description with insertion in the given
// (lexicographic) order and the algebraic rank-(k-2) adjacency test.
std::vector<Vec> dd_pointed(const std::vector<Vec>& rows, std::size_t k) {
    if (k == 0) return {};

    // Initial simplicial cone from the first k independent rows.
    std::vector<std::size_t> init;
    Mat cur(0, k);
    for (std::size_t i = 0; i < rows.size() && init.size() < k; ++i) {
        Mat cand = stack_rows(cur, Mat::from_rows({rows[i]}, k));
        if (rank(cand) > cur.rows) {
            cur = row_basis(cand);
            init.push_back(i);
        }
    }
    if (init.size() < k) throw InternalError("dd: projected constraints do not span");

    Mat B(k, k);
    for (std::size_t i = 0; i < k; ++i) B.set_row(i, rows[init[i]]);
    auto Binv = inverse(B);
    if (!Binv) throw InternalError("dd: initial basis singular");

    std::vector<Vec> rays;
    for (std::size_t j = 0; j < k; ++j) {
        Vec r(k);
        for (std::size_t i = 0; i < k; ++i) r[i] = Binv->at(i, j);
        rays.push_back(canonical_ray(r));
    }

    std::vector<std::size_t> processed(init.begin(), init.end());
    std::set<std::size_t> in_init(init.begin(), init.end());

    for (std::size_t t = 0; t < rows.size(); ++t) {
        if (in_init.count(t)) continue;
        const Vec& a = rows[t];

        std::vector<Rat> val(rays.size());
        bool any_neg = false;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i]);
            if (val[i] < 0) any_neg = true;
        }
        if (!any_neg) {
            processed.push_back(t);
            continue;
        }

        // Active sets over the processed constraints.
        std::vector<std::vector<std::size_t>> active(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i)
            for (auto c : processed)
                if (dot(rows[c], rays[i]) == 0) active[i].push_back(c);

        std::vector<Vec> next;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (val[i] >= 0) next.push_back(rays[i]);

        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0) continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (val[q] >= 0) continue;
                std::vector<std::size_t> idx;
                std::set_intersection(active[p].begin(), active[p].end(),
                                      active[q].begin(), active[q].end(),
                                      std::back_inserter(idx));
                std::vector<Vec> common;
                common.reserve(idx.size());
                for (auto c : idx) common.push_back(rows[c]);
                if (k >= 2 && rank(Mat::from_rows(common, k)) != k - 2) continue;
                Vec nr(k);
                for (std::size_t j = 0; j < k; ++j)
                    nr[j] = val[p] * rays[q][j] - val[q] * rays[p][j];
                next.push_back(canonical_ray(nr));
            }
        }
        std::sort(next.begin(), next.end(), vec_less);
        next.erase(std::unique(next.begin(), next.end()), next.end());
        rays = std::move(next);
        processed.push_back(t);
    }

    std::sort(rays.begin(), rays.end(), vec_less);
    return rays;
}

} // namespace

VRep enumerate_rays(const std::vector<Vec>& rows_in, std::size_t dim) {
    std::vector<Vec> rows = canonical_unique_rows(rows_in, dim);

    VRep out;
    Mat L = nullspace(Mat::from_rows(rows, dim));
    for (std::size_t i = 0; i < L.rows; ++i) out.lineality.push_back(canonical_ray(L.row(i)));

    Mat C = nullspace(L); // coordinates for the complement of the lineality
    const std::size_t k = C.rows;
    if (k == 0) return out;

    std::vector<Vec> projected;
    projected.reserve(rows.size());
    for (const auto& a : rows) projected.push_back(canonical_ray(mat_vec(C, a)));
    std::sort(projected.begin(), projected.end(), vec_less);
    projected.erase(std::unique(projected.begin(), projected.end()), projected.end());

    Mat Ct = transpose(C);
    for (const auto& y : dd_pointed(projected, k))
        out.rays.push_back(canonical_ray(mat_vec(Ct, y)));
    std::sort(out.rays.begin(), out.rays.end(), vec_less);
    return out;
}

Cone v_to_h(std::vector<Vec> generators, std::size_t dim) {
    if (generators.empty())
        throw InvalidArgumentError("v_to_h: at least one generator is required");
    for (const auto& g : generators)
        if (g.size() != dim) throw DimensionMismatchError("v_to_h: generator dimension mismatch");

    VRep dual = enumerate_rays(generators, dim);
    std::vector<Vec> facets = dual.rays;
    for (const auto& l : dual.lineality) {
        facets.push_back(l);
        facets.push_back(vec_neg(l));
    }
    for (auto& f : facets) f = canonical_ray(f);
    std::sort(facets.begin(), facets.end(), vec_less);
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    Cone c;
    c.dim = dim;
    c.generators = std::move(generators);
    c.facets = std::move(facets);

    std::set<Vec, bool (*)(const Vec&, const Vec&)> seen(vec_less);
    for (const auto& g : c.generators) {
        if (vec_is_zero(g)) continue;
        Vec cg = canonical_ray(g);
        if (!seen.insert(cg).second) continue;
        std::vector<Vec> active;
        for (const auto& f : c.facets)
            if (dot(f, cg) == 0) active.push_back(f);
        if (rank(Mat::from_rows(active, dim)) + 1 == dim) c.extreme_rays.push_back(cg);
    }
    return c;
}

std::vector<Vec> h_to_v(const std::vector<Vec>& facets, std::size_t dim) {
    VRep vr = enumerate_rays(facets, dim);
    std::vector<Vec> gens = vr.rays;
    for (const auto& l : vr.lineality) {
        gens.push_back(l);
        gens.push_back(vec_neg(l));
    }
    std::sort(gens.begin(), gens.end(), vec_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

bool polytope_is_zero(const HPolyhedron& p, const std::vector<Vec>& spanning_functionals) {
    for (const auto& b : p.offsets)
        if (b > 0) throw PreconditionError("polytope_is_zero: 0 is not in the polyhedron");
    const std::size_t dim = p.dim();
    if (rank(Mat::from_rows(spanning_functionals, dim)) != dim)
        throw PreconditionError("polytope_is_zero: functionals do not span the dual space");
    for (const auto& h : spanning_functionals) {
        auto up = lp(h, Sense::maximize, p);
        if (up.status != LPStatus::optimal || *up.value != 0) return false;
        auto dn = lp(h, Sense::minimize, p);
        if (dn.status != LPStatus::optimal || *dn.value != 0) return false;
    }
    return true;
}

SubspaceCone cone_subspace_intersection(const Cone& c, const Mat& basis) {
    if (basis.cols != c.dim)
        throw DimensionMismatchError("cone_subspace_intersection: basis width mismatch");
    if (rank(basis) != basis.rows)
        throw PreconditionError("cone_subspace_intersection: basis rows must be independent");

    const std::size_t r = basis.rows;
    std::vector<Vec> rows;
    rows.reserve(c.facets.size());
    for (const auto& f : c.facets) {
        Vec row(r);
        for (std::size_t j = 0; j < r; ++j) row[j] = dot(f, basis.row(j));
        rows.push_back(std::move(row));
    }

    SubspaceCone out;
    Mat Bt = transpose(basis);
    for (const auto& y : h_to_v(rows, r)) {
        Vec cy = canonical_ray(y);
        out.sub_generators.push_back(cy);
        out.ambient_generators.push_back(mat_vec(Bt, cy));
    }
    return out;
}

} // namespace ordercone
