#pragma once

#include <vector>

#include "ordercone/order_space.hpp"

namespace ordercone {

// A band B = B^⊥⊥, stored through its facet support:
// B = {x : f_j(x) = 0 for all j in support}, with the support saturated
// (every facet vanishing on B is listed) and the basis canonical.
struct Band {
    Mat basis;
    std::vector<std::size_t> support; // sorted, saturated
    bool directed = false;
    bool is_projection_band = false;
    int id = -1;

    std::size_t dimension() const { return basis.rows; }
};

// Facet indices carrying some element of S: {i : exists s in S, f_i(s) != 0}.
std::vector<std::size_t> support_of(const OrderedSpace& s, const std::vector<Vec>& S);

// The band Z(J) = {x : f_j(x) = 0, j in J} with flags filled in.
Band band_from_support(const OrderedSpace& s, const std::vector<std::size_t>& J);

// Disjoint complement of a subspace given by basis rows (support route).
Band complement_of_basis(const OrderedSpace& s, const Mat& basis);

// S^⊥ via the facet-support rule, cross-validated against the disjointness
// oracle: every basis vector of the result must be disjoint from every
// element of S, and probes outside the result must fail disjointness with
// some element of S. A failed cross-check throws ValidationFailure — the
// support rule is not asserted by the theory and is guarded here.
Band disjoint_complement(const OrderedSpace& s, const std::vector<Vec>& S);

// S^⊥⊥ — the smallest band containing S.
Band band_closure(const OrderedSpace& s, const std::vector<Vec>& S);

// All bands, sorted by (dimension, basis lexicographic), ids assigned in
// that order. Requires at most 20 facets.
std::vector<Band> enumerate_bands(const OrderedSpace& s);

// Intersection of bands; the meet of the complete lattice. Empty input
// yields the whole space.
Band band_meet(const OrderedSpace& s, const std::vector<Band>& bs);

// Smallest enumerated band containing every input.
Band band_join(const OrderedSpace& s, const std::vector<Band>& all_bands,
               const std::vector<Band>& bs);

struct BandSumCheck {
    bool sum_is_band = false;
    Band closure;            // (B+C)^⊥⊥
    bool identity_holds = false; // B∩C = (B^⊥+C^⊥)^⊥ and (B+C)^⊥⊥ = (B^⊥∩C^⊥)^⊥
    Mat sum_basis;           // canonical basis of B+C
};

BandSumCheck band_sum_check(const OrderedSpace& s, const Band& B, const Band& C);

} // namespace ordercone
