#pragma once

#include <optional>
#include <utility>

#include "ordercone/projections.hpp"
#include "ordercone/rng.hpp"

namespace ordercone {

// Four independent routes to "X is a vector lattice"; they must agree:
//   simplicial:          exactly n extreme rays, linearly independent
//   rank1_census:        number of rank-1 band projections (lattice iff = n)
//   m_equals_n:          2^m counting theorem with m = dim
//   extreme rays pairwise disjoint with exactly n of them
// When false, the witness is a pair of extreme rays with
// [-x,x] ∩ [-y,y] = {0} that are nevertheless not disjoint.
struct LatticeRoutes {
    bool simplicial = false;
    std::size_t rank1_census = 0;
    bool m_equals_n = false;
    bool extreme_ray_pairwise_disjoint = false;
};

struct LatticeVerdict {
    bool is_lattice = false;
    LatticeRoutes routes;
    std::optional<std::pair<Vec, Vec>> witness;
};

LatticeVerdict is_vector_lattice(const OrderedSpace& s);
LatticeVerdict is_vector_lattice(const OrderedSpace& s, const BooleanAlgebraReport& report);

// For a non-lattice, the first atom pair (canonical order) that is
// D-disjoint but not disjoint; none for lattices. A non-lattice without
// such a pair contradicts the extreme-ray argument and throws
// SearchExhausted.
std::optional<std::pair<Vec, Vec>> weakly_pervasive_witness(const OrderedSpace& s);

struct PervasiveResult {
    bool pervasive = false;
    std::optional<Vec> witness; // nonzero positive x below every positive upper bound of b
};

// Pointwise pervasiveness probe at b (b must satisfy b ≰ 0): is there a
// nonzero 0 <= x below every positive upper bound of b?
PervasiveResult pervasive_at(const OrderedSpace& s, const Vec& b);

struct HierarchyRow {
    Vec x, y;
    bool disjoint = false;
    bool symmetric_interval_disjoint = false;
    bool d_disjoint = false;
};

// disjoint => symmetric-interval-disjoint => D-disjoint on each pair;
// a broken implication throws TheoremViolation.
std::vector<HierarchyRow> hierarchy_report(const OrderedSpace& s,
                                           const std::vector<std::pair<Vec, Vec>>& pairs);

// Deterministic random pre-Riesz space: ray_count rays of the form (p, 1)
// with p rational in [-1,1]^{dim-1}, resampled until the rays span.
OrderedSpace random_space(std::size_t dim, std::size_t ray_count, std::uint64_t seed);

} // namespace ordercone
