#include "ordercone/lattice.hpp"

#include <algorithm>

#include "ordercone/errors.hpp"

namespace ordercone {

LatticeVerdict is_vector_lattice(const OrderedSpace& s) {
    return is_vector_lattice(s, enumerate_band_projections(s));
}

LatticeVerdict is_vector_lattice(const OrderedSpace& s, const BooleanAlgebraReport& report) {
    const auto& rays = s.cone.extreme_rays;
    const std::size_t n = s.dim;

    LatticeVerdict v;
    v.routes.simplicial =
        rays.size() == n && rank(Mat::from_rows(rays, n)) == n;

    for (const auto& p : report.projections)
        if (p.rank() == 1) ++v.routes.rank1_census;

    v.routes.m_equals_n = report.m == n;

    bool pairwise = true;
    std::optional<std::pair<Vec, Vec>> bad_pair;
    for (std::size_t i = 0; i < rays.size() && !bad_pair; ++i)
        for (std::size_t j = i + 1; j < rays.size(); ++j)
            if (!is_disjoint(s, rays[i], rays[j], DisjointMethod::oracle).disjoint) {
                pairwise = false;
                bad_pair = std::make_pair(rays[i], rays[j]);
                break;
            }
    v.routes.extreme_ray_pairwise_disjoint = pairwise && rays.size() == n;

    const bool r1 = v.routes.simplicial;
    const bool r2 = v.routes.rank1_census == n;
    const bool r3 = v.routes.m_equals_n;
    const bool r4 = v.routes.extreme_ray_pairwise_disjoint;
    if (r1 != r2 || r2 != r3 || r3 != r4)
        throw TheoremViolation("vector-lattice routes disagree");
    v.is_lattice = r1;

    if (!v.is_lattice) {
        // Distinct atoms always have symmetric-interval intersection {0};
        // a non-lattice therefore owns a non-disjoint atom pair.
        if (!bad_pair)
            throw TheoremViolation(
                "non-lattice with pairwise disjoint extreme rays");
        if (!is_symmetric_interval_disjoint(s, bad_pair->first, bad_pair->second))
            throw TheoremViolation(
                "atom pair with a nonzero symmetric-interval intersection");
        v.witness = bad_pair;
    }
    return v;
}

std::optional<std::pair<Vec, Vec>> weakly_pervasive_witness(const OrderedSpace& s) {
    auto verdict = is_vector_lattice(s);
    if (verdict.is_lattice) return std::nullopt;

    const auto& rays = s.cone.extreme_rays;
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = i + 1; j < rays.size(); ++j)
            if (is_D_disjoint(s, rays[i], rays[j]) &&
                !is_disjoint(s, rays[i], rays[j], DisjointMethod::oracle).disjoint)
                return std::make_pair(rays[i], rays[j]);
    throw SearchExhausted(
        "non-lattice without a D-disjoint non-disjoint atom pair");
}

PervasiveResult pervasive_at(const OrderedSpace& s, const Vec& b) {
    if (contains_positive(s, vec_neg(b)))
        throw NotApplicableError("pervasive_at: b <= 0");

    const auto& F = s.cone.facets;
    const Vec fb = facet_values(s, b);

    // U(b) = positive upper bounds of b.
    HPolyhedron U;
    for (std::size_t i = 0; i < F.size(); ++i)
        U.add(F[i], fb[i] > 0 ? fb[i] : Rat(0));

    // Least facet values over U(b).
    Vec mins(F.size());
    for (std::size_t i = 0; i < F.size(); ++i) {
        auto r = lp(F[i], Sense::minimize, U);
        if (r.status != LPStatus::optimal)
            throw InternalError("pervasive_at: facet minimum must exist");
        mins[i] = *r.value;
    }

    // {x in X+ : f_i(x) <= mins_i}; nonzero member <=> positive total mass.
    HPolyhedron P;
    for (std::size_t i = 0; i < F.size(); ++i) {
        P.add(F[i], Rat(0));
        P.add(vec_neg(F[i]), -mins[i]);
    }
    Vec sum(s.dim, Rat(0));
    for (const auto& f : F) sum = vec_add(sum, f);
    auto r = lp(sum, Sense::maximize, P);
    if (r.status != LPStatus::optimal)
        throw InternalError("pervasive_at: mass LP must be bounded");

    PervasiveResult out;
    out.pervasive = *r.value > 0;
    if (out.pervasive) out.witness = r.point;
    return out;
}

std::vector<HierarchyRow> hierarchy_report(const OrderedSpace& s,
                                           const std::vector<std::pair<Vec, Vec>>& pairs) {
    std::vector<HierarchyRow> rows;
    rows.reserve(pairs.size());
    for (const auto& [x, y] : pairs) {
        if (!contains_positive(s, x) || !contains_positive(s, y))
            throw NotPositiveError("hierarchy_report: pairs must be positive");
        HierarchyRow row;
        row.x = x;
        row.y = y;
        row.disjoint = is_disjoint(s, x, y, DisjointMethod::oracle).disjoint;
        row.symmetric_interval_disjoint = is_symmetric_interval_disjoint(s, x, y);
        row.d_disjoint = is_D_disjoint(s, x, y);
        if ((row.disjoint && !row.symmetric_interval_disjoint) ||
            (row.symmetric_interval_disjoint && !row.d_disjoint))
            throw TheoremViolation("disjointness hierarchy implication broke");
        rows.push_back(std::move(row));
    }
    return rows;
}

OrderedSpace random_space(std::size_t dim, std::size_t ray_count, std::uint64_t seed) {
    if (dim < 2 || dim > 6)
        throw InvalidArgumentError("random_space: dim must be in [2, 6]");
    if (ray_count < dim)
        throw InvalidArgumentError("random_space: need at least dim rays");

    SplitMix64 rng(seed ^ (0x9e3779b97f4a7c15ULL * dim) ^ (0xc2b2ae3d27d4eb4fULL * ray_count));
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Vec> rays;
        rays.reserve(ray_count);
        for (std::size_t k = 0; k < ray_count; ++k) {
            Vec v(dim);
            for (std::size_t i = 0; i + 1 < dim; ++i) v[i] = rng.unit_rat();
            v[dim - 1] = 1; // open halfspace keeps the cone pointed
            rays.push_back(std::move(v));
        }
        if (rank(Mat::from_rows(rays, dim)) != dim) continue;
        return validate(std::move(rays), dim);
    }
    throw InternalError("random_space: could not sample a generating cone");
}

} // namespace ordercone
