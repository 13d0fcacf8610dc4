#include "ordercone/bands.hpp"

#include <algorithm>
#include <map>

#include "ordercone/errors.hpp"
#include "ordercone/parallel.hpp"
#include "ordercone/rng.hpp"

namespace ordercone {

namespace {

using Support = std::vector<std::size_t>;

Support all_indices(std::size_t m) {
    Support J(m);
    for (std::size_t i = 0; i < m; ++i) J[i] = i;
    return J;
}

Support complement_indices(std::size_t m, const Support& J) {
    Support out;
    std::size_t k = 0;
    for (std::size_t i = 0; i < m; ++i) {
        while (k < J.size() && J[k] < i) ++k;
        if (k < J.size() && J[k] == i) continue;
        out.push_back(i);
    }
    return out;
}

Mat facet_rows(const OrderedSpace& s, const Support& J) {
    std::vector<Vec> rows;
    rows.reserve(J.size());
    for (auto j : J) rows.push_back(s.cone.facets[j]);
    return Mat::from_rows(rows, s.dim);
}

// Facets vanishing on the subspace spanned by `basis`.
Support saturate(const OrderedSpace& s, const Mat& basis) {
    Support J;
    for (std::size_t i = 0; i < s.cone.facets.size(); ++i) {
        bool vanishes = true;
        for (std::size_t r = 0; r < basis.rows && vanishes; ++r)
            vanishes = dot(s.cone.facets[i], basis.row(r)) == 0;
        if (vanishes) J.push_back(i);
    }
    return J;
}

bool band_directed(const OrderedSpace& s, const Mat& basis) {
    if (basis.rows == 0) return true;
    auto sc = cone_subspace_intersection(s.cone, basis);
    return rank(Mat::from_rows(sc.ambient_generators, s.dim)) == basis.rows;
}

// Direct-sum test for band + complement; positivity failure on a genuine
// direct sum contradicts the band-projection characterisation and is fatal.
bool band_is_projection(const OrderedSpace& s, const Mat& basis, const Mat& comp_basis) {
    if (basis.rows + comp_basis.rows != s.dim) return false;
    Mat P = projection_onto(basis, comp_basis);
    Mat Q = mat_sub(Mat::identity(s.dim), P);
    if (!positive_operator(s, P) || !positive_operator(s, Q))
        throw PositivityContradiction(
            "X = B ⊕ B^⊥ holds but the projection onto B is not positive");
    return true;
}

} // namespace

std::vector<std::size_t> support_of(const OrderedSpace& s, const std::vector<Vec>& S) {
    Support J;
    for (std::size_t i = 0; i < s.cone.facets.size(); ++i) {
        for (const auto& v : S) {
            if (v.size() != s.dim)
                throw DimensionMismatchError("support_of: vector dimension mismatch");
            if (dot(s.cone.facets[i], v) != 0) {
                J.push_back(i);
                break;
            }
        }
    }
    return J;
}

Band band_from_support(const OrderedSpace& s, const Support& J) {
    Band b;
    b.basis = nullspace(facet_rows(s, J));
    b.support = saturate(s, b.basis);
    b.directed = band_directed(s, b.basis);
    Mat comp = nullspace(facet_rows(s, complement_indices(s.facet_count(), b.support)));
    b.is_projection_band = band_is_projection(s, b.basis, comp);
    return b;
}

Band complement_of_basis(const OrderedSpace& s, const Mat& basis) {
    Support supp = complement_indices(s.facet_count(), saturate(s, basis));
    return band_from_support(s, supp);
}

Band disjoint_complement(const OrderedSpace& s, const std::vector<Vec>& S) {
    Band b = band_from_support(s, support_of(s, S));

    // Cross-check against the definitional oracle. (a) everything we return
    // must be disjoint from S.
    for (std::size_t r = 0; r < b.basis.rows; ++r)
        for (const auto& v : S)
            if (!is_disjoint(s, b.basis.row(r), v, DisjointMethod::oracle).disjoint)
                throw ValidationFailure(
                    "facet-support complement contains a vector not disjoint from S");

    // (b) probes outside the result must fail disjointness with some element
    // of S. Skipped when the result is the whole space.
    const bool have_nonzero =
        std::any_of(S.begin(), S.end(), [](const Vec& v) { return !vec_is_zero(v); });
    if (b.basis.rows < s.dim && have_nonzero) {
        SplitMix64 rng(0xbadc0de5eed1234ULL + 977 * s.dim + b.basis.rows);
        for (int probe = 0; probe < 50; ++probe) {
            Vec x;
            do {
                x = rng.vec(s.dim, -9, 9);
            } while (subspace_contains(b.basis, x));
            bool hit = false;
            for (const auto& v : S) {
                if (vec_is_zero(v)) continue;
                if (!is_disjoint(s, x, v, DisjointMethod::oracle).disjoint) {
                    hit = true;
                    break;
                }
            }
            if (!hit)
                throw ValidationFailure(
                    "probe outside the facet-support complement is disjoint from all of S");
        }
    }
    return b;
}

Band band_closure(const OrderedSpace& s, const std::vector<Vec>& S) {
    Band first = disjoint_complement(s, S);
    return disjoint_complement(s, first.basis.to_rows());
}

std::vector<Band> enumerate_bands(const OrderedSpace& s) {
    const std::size_t m = s.facet_count();
    if (m > 20)
        throw TooManyFacetsError("enumerate_bands: more than 20 facets");

    // Saturated supports are exactly the flats of the facet matroid; every
    // support J collapses onto its flat without changing Z(J). Enumerate the
    // flats layer by layer instead of walking all 2^m subsets.
    struct Flat {
        std::uint32_t mask;
        Mat span; // canonical row space of the facets in the flat
    };
    std::map<std::uint32_t, Mat> flats;
    std::map<Mat, std::uint32_t, bool (*)(const Mat&, const Mat&)> span_to_mask(&mat_less);

    const auto flat_of_span = [&](const Mat& span) -> std::uint32_t {
        auto it = span_to_mask.find(span);
        if (it != span_to_mask.end()) return it->second;
        std::uint32_t mask = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (subspace_contains(span, s.cone.facets[i])) mask |= (1u << i);
        span_to_mask.emplace(span, mask);
        return mask;
    };

    std::vector<Flat> frontier;
    {
        Mat empty(0, s.dim);
        std::uint32_t mask = flat_of_span(empty);
        flats.emplace(mask, empty);
        frontier.push_back({mask, empty});
    }
    while (!frontier.empty()) {
        std::vector<Flat> next;
        for (const auto& fl : frontier) {
            if (fl.span.rows == s.dim) continue;
            for (std::size_t i = 0; i < m; ++i) {
                if (fl.mask & (1u << i)) continue;
                Mat span =
                    row_basis(stack_rows(fl.span, Mat::from_rows({s.cone.facets[i]}, s.dim)));
                std::uint32_t mask = flat_of_span(span);
                if (flats.emplace(mask, span).second) next.push_back({mask, span});
            }
        }
        frontier = std::move(next);
    }

    const auto mask_to_support = [m](std::uint32_t mask) {
        Support J;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1u << i)) J.push_back(i);
        return J;
    };
    const std::uint32_t full = (1u << m) - 1u;

    // Flat-level double complement: J ↦ flat(full \ J), twice. The memo map
    // is shared, so this pass stays sequential; it is cheap.
    const auto complement_mask = [&](std::uint32_t mask) -> std::uint32_t {
        Support raw = mask_to_support(full & ~mask);
        return flat_of_span(row_basis(facet_rows(s, raw)));
    };

    struct BandSeed {
        Support support;
        Mat span;
        Support comp_support;
    };
    std::vector<BandSeed> seeds;
    for (const auto& [mask, span] : flats) {
        const std::uint32_t Jp = complement_mask(mask);
        if (complement_mask(Jp) != mask) continue;
        seeds.push_back({mask_to_support(mask), span, mask_to_support(Jp)});
    }

    std::vector<Band> bands(seeds.size());
    parallel_for(seeds.size(), [&](std::size_t idx) {
        Band b;
        b.support = seeds[idx].support;
        b.basis = nullspace(seeds[idx].span);
        b.directed = band_directed(s, b.basis);
        Mat comp = nullspace(facet_rows(s, seeds[idx].comp_support));
        b.is_projection_band = band_is_projection(s, b.basis, comp);
        bands[idx] = std::move(b);
    });

    std::sort(bands.begin(), bands.end(),
              [](const Band& x, const Band& y) { return mat_less(x.basis, y.basis); });
    for (std::size_t i = 0; i < bands.size(); ++i) bands[i].id = static_cast<int>(i);
    return bands;
}

Band band_meet(const OrderedSpace& s, const std::vector<Band>& bs) {
    Support u;
    for (const auto& b : bs) {
        Support merged;
        std::set_union(u.begin(), u.end(), b.support.begin(), b.support.end(),
                       std::back_inserter(merged));
        u = std::move(merged);
    }
    return band_from_support(s, u);
}

Band band_join(const OrderedSpace& s, const std::vector<Band>& all_bands,
               const std::vector<Band>& bs) {
    std::vector<Band> containing;
    for (const auto& cand : all_bands) {
        bool ok = true;
        for (const auto& b : bs)
            if (!subspace_contains_all(cand.basis, b.basis)) {
                ok = false;
                break;
            }
        if (ok) containing.push_back(cand);
    }
    Band meet = band_meet(s, containing);
    for (const auto& cand : all_bands)
        if (cand.basis == meet.basis) return cand;
    throw TheoremViolation("join of bands is not an enumerated band");
}

BandSumCheck band_sum_check(const OrderedSpace& s, const Band& B, const Band& C) {
    BandSumCheck out;
    out.sum_basis = subspace_sum(B.basis, C.basis);

    Band sum_complement = complement_of_basis(s, out.sum_basis);
    out.closure = complement_of_basis(s, sum_complement.basis);
    out.sum_is_band = out.sum_basis == out.closure.basis;

    // (a) B ∩ C = (B^⊥ + C^⊥)^⊥
    Band Bp = complement_of_basis(s, B.basis);
    Band Cp = complement_of_basis(s, C.basis);
    Mat lhs_a = subspace_intersection(B.basis, C.basis);
    Mat rhs_a = complement_of_basis(s, subspace_sum(Bp.basis, Cp.basis)).basis;
    // (c) (B+C)^⊥⊥ = (B^⊥ ∩ C^⊥)^⊥
    Mat rhs_c = complement_of_basis(s, subspace_intersection(Bp.basis, Cp.basis)).basis;

    out.identity_holds = lhs_a == rhs_a && out.closure.basis == rhs_c;
    return out;
}

} // namespace ordercone
