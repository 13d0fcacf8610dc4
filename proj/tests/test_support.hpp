#pragma once

#include <optional>
#include <vector>

#include "ordercone/lattice.hpp"
#include "ordercone/order_space.hpp"
#include "ordercone/rng.hpp"

namespace oc = ordercone;

inline oc::Vec vq(const char* text) { return oc::parse_vec(text); }

inline std::vector<oc::Vec> four_ray_generators() {
    return {vq("1,0,1"), vq("0,1,1"), vq("-1,0,1"), vq("0,-1,1")};
}

inline oc::OrderedSpace four_ray_space() { return oc::validate(four_ray_generators(), 3); }

inline oc::OrderedSpace standard_space(std::size_t n) {
    std::vector<oc::Vec> gens;
    for (std::size_t i = 0; i < n; ++i) {
        oc::Vec e(n, oc::Rat(0));
        e[i] = 1;
        gens.push_back(e);
    }
    return oc::validate(gens, n);
}

// Four-ray cone times R with the product order: cone generated by (v_k, 0)
// and (0,0,0,1).
inline oc::OrderedSpace four_ray_times_r() {
    std::vector<oc::Vec> gens;
    for (const auto& v : four_ray_generators()) {
        oc::Vec g(4, oc::Rat(0));
        for (std::size_t i = 0; i < 3; ++i) g[i] = v[i];
        gens.push_back(g);
    }
    gens.push_back(vq("0,0,0,1"));
    return oc::validate(gens, 4);
}

// Facet lookup by functional value pattern: returns the index of `f` within
// the canonical facet list, asserting it is present up to positive scaling.
inline std::optional<std::size_t> facet_index(const oc::OrderedSpace& s, const oc::Vec& f) {
    oc::Vec cf = oc::canonical_ray(f);
    for (std::size_t i = 0; i < s.cone.facets.size(); ++i)
        if (s.cone.facets[i] == cf) return i;
    return std::nullopt;
}

// Independent LP oracle: enumerate all basic points (vertices candidates) of
// {x : N x >= b} by solving every dim-subset of tight constraints, keep the
// feasible ones, and optimize over them. Only meaningful for LPs known to
// attain their optimum at a vertex; callers assert feasibility/boundedness
// facts separately.
struct BruteLP {
    std::vector<oc::Vec> feasible_basic_points;

    BruteLP(const oc::HPolyhedron& P, std::size_t dim) {
        const std::size_t m = P.normals.size();
        std::vector<std::size_t> idx(dim);
        enumerate(P, dim, 0, 0, idx);
    }

    std::optional<oc::Rat> best(const oc::Vec& objective, bool maximize) const {
        std::optional<oc::Rat> out;
        for (const auto& x : feasible_basic_points) {
            oc::Rat v = oc::dot(objective, x);
            if (!out || (maximize ? v > *out : v < *out)) out = v;
        }
        return out;
    }

private:
    void enumerate(const oc::HPolyhedron& P, std::size_t dim, std::size_t start,
                   std::size_t chosen, std::vector<std::size_t>& idx) {
        if (chosen == dim) {
            std::vector<oc::Vec> rows;
            oc::Vec rhs;
            for (auto i : idx) {
                rows.push_back(P.normals[i]);
                rhs.push_back(P.offsets[i]);
            }
            auto sol = oc::solve(oc::Mat::from_rows(rows, dim), rhs);
            if (!sol.consistent) return;
            for (std::size_t i = 0; i < P.normals.size(); ++i)
                if (oc::dot(P.normals[i], sol.x) < P.offsets[i]) return;
            feasible_basic_points.push_back(sol.x);
            return;
        }
        for (std::size_t i = start; i < P.normals.size(); ++i) {
            idx[chosen] = i;
            enumerate(P, dim, i + 1, chosen + 1, idx);
        }
    }
};

// Random positive vector: a conic combination of the generators with small
// nonnegative rational weights.
inline oc::Vec random_positive(const oc::OrderedSpace& s, oc::SplitMix64& rng) {
    oc::Vec x(s.dim, oc::Rat(0));
    for (const auto& g : s.cone.generators) {
        oc::Rat w(rng.int_in(0, 3), rng.int_in(1, 3));
        x = oc::vec_add(x, oc::vec_scale(w, g));
    }
    return x;
}

inline oc::Vec random_vector(const oc::OrderedSpace& s, oc::SplitMix64& rng) {
    return rng.vec(s.dim, -6, 6);
}
