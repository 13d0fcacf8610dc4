#pragma once

#include <optional>
#include <vector>

#include "ordercone/bands.hpp"

namespace ordercone {

// P = projection onto range_band along kernel_band = range_band^⊥.
// Invariants: P² = P, and both P and I - P map the cone into itself.
struct BandProjection {
    Mat matrix;
    Band range_band;
    Band kernel_band;
    bool P_positive = false;
    bool complement_positive = false;

    std::size_t rank() const { return range_band.basis.rows; }
};

// If B is complemented by B^⊥, the band projection onto B; otherwise
// nullopt. A direct sum whose projection fails positivity contradicts the
// characterisation theorem and throws PositivityContradiction.
std::optional<BandProjection> is_projection_band(const OrderedSpace& s, const Band& B);

// The six characterisation routes for an idempotent P, evaluated
// independently:
//   (i)   P is the band projection of its range band
//   (ii)  ker P = (PX)^⊥
//   (iii) PX = (ker P)^⊥
//   (iv)  PX ⊥ ker P
//   (v)   P >= 0 and I - P >= 0
//   (vi)  route (v) read through I - P
// A mixed outcome is a theorem violation and throws.
struct Characterisation {
    bool band_projection_def = false;
    bool kernel_is_range_complement = false;
    bool range_is_kernel_complement = false;
    bool range_disjoint_kernel = false;
    bool both_positive = false;
    bool complement_route = false;
    bool verdict = false;

    std::vector<bool> as_list() const {
        return {band_projection_def,     kernel_is_range_complement,
                range_is_kernel_complement, range_disjoint_kernel,
                both_positive,           complement_route};
    }
};

Characterisation check_characterisation(const OrderedSpace& s, const Mat& P);

// The Boolean algebra of all band projections: 2^m elements generated by
// the m minimal projection bands, with meet PQ, join P+Q-PQ, complement
// I-P. Construction re-verifies the counting theorem and the algebra laws.
struct BooleanAlgebraReport {
    std::vector<Band> bands;                 // full band enumeration
    std::vector<BandProjection> projections; // sorted by (rank, range basis)
    std::size_t m = 0;                       // number of minimal projection bands
    std::vector<int> minimal_band_ids;       // ids into `bands`
    std::vector<std::size_t> minimal_projection_ids; // indices into `projections`
    std::vector<std::vector<std::size_t>> meet_table;
    std::vector<std::vector<std::size_t>> join_table;
    std::vector<std::size_t> complement_map;
    bool is_lattice = false; // m == dim
};

BooleanAlgebraReport enumerate_band_projections(const OrderedSpace& s);

struct BooleanOps {
    BandProjection meet;
    BandProjection join;
    BandProjection complement;
};

// PQ, P+Q-PQ, I-P with the commutation and range identities re-checked.
BooleanOps boolean_ops(const OrderedSpace& s, const Mat& P, const Mat& Q);

struct TripleVerdict {
    bool a = false, b = false, c = false;
    bool all() const { return a && b && c; }
};

// PX ⊆ QX  <=>  QP = P  <=>  P <= Q, evaluated independently; disagreement
// throws TheoremViolation.
TripleVerdict domination_check(const OrderedSpace& s, const Mat& P, const Mat& Q);

// PQ = 0  <=>  PX ∩ QX = {0}  <=>  PX ⊥ QX, evaluated independently.
TripleVerdict trivial_intersection_check(const OrderedSpace& s, const Mat& P, const Mat& Q);

// Both PX and ker P projection bands <=> P is a band projection.
bool range_kernel_check(const OrderedSpace& s, const Mat& P);

// P1...Pk x must equal inf{P1 x, ..., Pk x} for positive x.
bool product_infimum_check(const OrderedSpace& s, const std::vector<Mat>& projections,
                           const Vec& x);

// X as the product of its minimal projection bands, each a pre-Riesz space
// with only trivial projection bands; iso maps x to the stacked factor
// coordinates of (P_1 x, ..., P_m x).
struct Decomposition {
    std::vector<OrderedSpace> factors;
    std::vector<Mat> factor_bases; // ambient bases of the minimal bands
    Mat iso;                       // dim x dim change of basis
    BooleanAlgebraReport report;
};

Decomposition decompose(const OrderedSpace& s);

// Meet of all projection bands containing S (the whole-list meet for empty S).
Band generated_projection_band(const OrderedSpace& s, const std::vector<Vec>& S);

} // namespace ordercone
