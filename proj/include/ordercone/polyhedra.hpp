#pragma once

#include <optional>
#include <vector>

#include "ordercone/linalg.hpp"
#include "ordercone/rational.hpp"

namespace ordercone {

// A polyhedral cone carried in both representations.
//   facets:       irredundant functionals f_i with cone = {x : f_i(x) >= 0},
//                 scaled to coprime integers and sorted lexicographically.
//   extreme_rays: canonical representatives of the extreme rays, in first
//                 occurrence order of the generators they came from.
struct Cone {
    std::size_t dim = 0;
    std::vector<Vec> generators;
    std::vector<Vec> facets;
    std::vector<Vec> extreme_rays;
};

// {x : normals[i] . x >= offsets[i]}
struct HPolyhedron {
    std::vector<Vec> normals;
    std::vector<Rat> offsets;

    std::size_t dim() const { return normals.empty() ? 0 : normals.front().size(); }
    void add(const Vec& n, const Rat& b) {
        normals.push_back(n);
        offsets.push_back(b);
    }
};

enum class LPStatus { optimal, unbounded, infeasible };
enum class Sense { minimize, maximize };

// Exact LP outcome. Every returned certificate has been re-verified:
//   optimal:    point is feasible, certificate y >= 0 satisfies N^T y = c
//               (minimize) or N^T y = -c (maximize) and b^T y equals the
//               optimum in the minimize sense.
//   infeasible: certificate y >= 0 with N^T y = 0 and b^T y > 0 (Farkas).
//   unbounded:  certificate d with N d >= 0 improving the objective; point is
//               a feasible starting point.
struct LPResult {
    LPStatus status = LPStatus::infeasible;
    std::optional<Rat> value;
    std::optional<Vec> point;
    std::optional<Vec> certificate;
};

LPResult lp(const Vec& objective, Sense sense, const HPolyhedron& constraints);

// Feasibility of {alpha >= 0 : sum alpha_i g_i = x}. Used as an
// LP-independent membership route in tests and round-trip checks.
bool cone_member(const std::vector<Vec>& generators, const Vec& x);

// Scale a nonzero vector by a positive rational so its entries become
// coprime integers. Zero stays zero.
Vec canonical_ray(const Vec& v);

// V-representation of {x : rows[i] . x >= 0}.
struct VRep {
    std::vector<Vec> rays;      // extreme rays of the pointed part
    std::vector<Vec> lineality; // canonical basis of the lineality space
};
VRep enumerate_rays(const std::vector<Vec>& rows, std::size_t dim);

// Double-description conversion generators -> facets (+ extreme ray census).
Cone v_to_h(std::vector<Vec> generators, std::size_t dim);

// Generators of {x : facets[i] . x >= 0}: extreme rays plus +-lineality.
std::vector<Vec> h_to_v(const std::vector<Vec>& facets, std::size_t dim);

// True iff p = {0}. Requires 0 in p and functionals spanning the dual space;
// decided by maximizing and minimizing each functional over p.
bool polytope_is_zero(const HPolyhedron& p, const std::vector<Vec>& spanning_functionals);

struct SubspaceCone {
    std::vector<Vec> sub_generators;     // in subspace coordinates
    std::vector<Vec> ambient_generators; // the same rays, ambient coordinates
};

// cone ∩ span(basis rows), as generators in both coordinate systems.
SubspaceCone cone_subspace_intersection(const Cone& c, const Mat& basis);

} // namespace ordercone
