#pragma once

#include <optional>
#include <vector>

#include "ordercone/polyhedra.hpp"

namespace ordercone {

struct Validation {
    bool pointed = false;
    bool generating = false;
    bool preriesz = false;
};

// A validated pre-Riesz space: pointed, generating, closed polyhedral cone.
// Polyhedral cones are closed, hence Archimedean, so pointed + generating is
// exactly the pre-Riesz condition at this level of generality.
struct OrderedSpace {
    std::size_t dim = 0;
    Cone cone;
    Validation validation;

    std::size_t facet_count() const { return cone.facets.size(); }
    const std::vector<Vec>& facets() const { return cone.facets; }
};

// Builds the cone in both representations and checks the flags.
// Throws NotPointedError / NotGeneratingError on rejection.
OrderedSpace validate(std::vector<Vec> generators, std::size_t dim);

// (f_1(x), ..., f_m(x)) in facet order.
Vec facet_values(const OrderedSpace& s, const Vec& x);

bool contains_positive(const OrderedSpace& s, const Vec& x);
bool leq(const OrderedSpace& s, const Vec& x, const Vec& y);

// {u : u >= a for all a in A}; offsets are max_a f_i(a).
HPolyhedron upper_bounds(const OrderedSpace& s, const std::vector<Vec>& A);
// {z : z <= a for all a in A}.
HPolyhedron lower_bounds(const OrderedSpace& s, const std::vector<Vec>& A);

// Greatest lower / least upper bound of a finite set, when it exists.
std::optional<Vec> infimum(const OrderedSpace& s, const std::vector<Vec>& A);
std::optional<Vec> supremum(const OrderedSpace& s, const std::vector<Vec>& A);

enum class DisjointMethod { oracle, fast };

// For a non-disjoint pair of positive vectors the witness w is a common
// lower bound outside -X+, certifying that 0 is not the infimum. For other
// non-disjoint pairs it is a point of exactly one of the two upper-bound
// sets whose equality defines disjointness.
struct DisjointnessVerdict {
    bool disjoint = false;
    std::optional<Vec> witness;
    DisjointMethod method = DisjointMethod::oracle;
};

// oracle: mutual containment of ub{x+y, -x-y} and ub{x-y, y-x}, one LP per
//         facet per direction — the definition itself.
// fast:   the facet support test f_i(x) f_i(y) = 0 for all i. Not asserted
//         by the theory; every use is cross-validated against the oracle.
DisjointnessVerdict is_disjoint(const OrderedSpace& s, const Vec& x, const Vec& y,
                                DisjointMethod method = DisjointMethod::oracle);

// [0,x] ∩ [0,y] = {0}; inputs must be positive.
bool is_D_disjoint(const OrderedSpace& s, const Vec& x, const Vec& y);

// [-x,x] ∩ [-y,y] = {0}; inputs must be positive.
bool is_symmetric_interval_disjoint(const OrderedSpace& s, const Vec& x, const Vec& y);

// Canonical representatives of the extreme rays of X+.
std::vector<Vec> atoms(const OrderedSpace& s);

// Active-facet rank test; when it passes, additionally verifies that
// [-a,a] is the segment between -a and a (throws TheoremViolation if the
// two routes ever disagree).
bool is_atom(const OrderedSpace& s, const Vec& a);

// All basis pairs oracle-disjoint. Valid test because disjoint complements
// in a pre-Riesz space are vector subspaces.
bool subspaces_disjoint(const OrderedSpace& s, const Mat& V_basis, const Mat& W_basis);

// span(V ∩ X+) = V.
bool subspace_is_directed(const OrderedSpace& s, const Mat& V_basis);

// True iff P maps every cone generator into X+.
bool positive_operator(const OrderedSpace& s, const Mat& P);

} // namespace ordercone
