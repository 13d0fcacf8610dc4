#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ordercone/polyhedra.hpp"
#include "test_support.hpp"

using namespace ordercone;

TEST_CASE("canonical_ray scaling") {
    CHECK(canonical_ray(vq("2/3,4/3,0")) == vq("1,2,0"));
    CHECK(canonical_ray(vq("-2,-4,6")) == vq("-1,-2,3"));
    CHECK(canonical_ray(vq("0,0")) == vq("0,0"));
}

TEST_CASE("v_to_h: orthant is self-dual") {
    Cone c = v_to_h({vq("1,0"), vq("0,1")}, 2);
    REQUIRE(c.facets.size() == 2);
    CHECK(c.facets[0] == vq("0,1"));
    CHECK(c.facets[1] == vq("1,0"));
    CHECK(c.extreme_rays.size() == 2);
}

TEST_CASE("v_to_h: four-ray cone facets") {
    Cone c = v_to_h(four_ray_generators(), 3);
    std::vector<Vec> expected = {vq("-1,-1,1"), vq("-1,1,1"), vq("1,-1,1"), vq("1,1,1")};
    std::sort(expected.begin(), expected.end(), vec_less);
    CHECK(c.facets == expected);
    // every facet is nonnegative on every generator, and each vanishes on an
    // adjacent generator pair
    for (const auto& f : c.facets) {
        std::size_t zeros = 0;
        for (const auto& g : c.generators) {
            CHECK(dot(f, g) >= 0);
            if (dot(f, g) == 0) ++zeros;
        }
        CHECK(zeros == 2);
    }
    CHECK(c.extreme_rays == four_ray_generators());
}

TEST_CASE("v_to_h: single ray in the plane") {
    Cone c = v_to_h({vq("1,0")}, 2);
    // H-set must carve out exactly the half-line: x >= 0, y = 0
    std::vector<Vec> expected = {vq("0,-1"), vq("0,1"), vq("1,0")};
    CHECK(c.facets == expected);
    // brute-force check that the H-set equals the ray on a small grid
    for (int x = -3; x <= 3; ++x)
        for (int y = -3; y <= 3; ++y) {
            Vec p = {Rat(x), Rat(y)};
            bool in_h = true;
            for (const auto& f : c.facets) in_h = in_h && dot(f, p) >= 0;
            const bool on_ray = y == 0 && x >= 0;
            CHECK(in_h == on_ray);
        }
}

TEST_CASE("v_to_h handles lineality and degenerate input") {
    SUBCASE("full line") {
        Cone c = v_to_h({vq("1,0"), vq("-1,0")}, 2);
        // the cone is the x-axis: facets are the +-y functionals
        CHECK(c.facets == std::vector<Vec>{vq("0,-1"), vq("0,1")});
    }
    SUBCASE("zero generator only") {
        Cone c = v_to_h({vq("0,0")}, 2);
        CHECK(c.facets.size() == 4);
        CHECK(c.extreme_rays.empty());
    }
}

TEST_CASE("round trip: h_to_v(v_to_h(G)) spans the same cone") {
    SplitMix64 rng(424242);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t dim = 2 + rng.below(3);
        const std::size_t count = dim + rng.below(3);
        std::vector<Vec> gens;
        for (std::size_t k = 0; k < count; ++k) gens.push_back(rng.vec(dim, -4, 4));
        Cone c = v_to_h(gens, dim);
        auto back = h_to_v(c.facets, dim);
        // mutual membership, checked through the conic-combination LP route
        for (const auto& g : back) CHECK(cone_member(gens, g));
        for (const auto& g : gens) CHECK(cone_member(back, g));
    }
}

TEST_CASE("extreme rays have active rank dim-1 and others do not") {
    SplitMix64 rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t dim = 2 + rng.below(3);
        const std::size_t count = dim + 1 + rng.below(3);
        std::vector<Vec> gens;
        for (std::size_t k = 0; k < count; ++k) {
            Vec v(dim);
            for (std::size_t i = 0; i + 1 < dim; ++i) v[i] = rng.unit_rat();
            v[dim - 1] = 1;
            gens.push_back(v);
        }
        Cone c = v_to_h(gens, dim);
        for (const auto& g : c.generators) {
            if (vec_is_zero(g)) continue;
            std::vector<Vec> active;
            for (const auto& f : c.facets)
                if (dot(f, g) == 0) active.push_back(f);
            const bool is_extreme =
                std::find(c.extreme_rays.begin(), c.extreme_rays.end(), canonical_ray(g)) !=
                c.extreme_rays.end();
            CHECK(is_extreme == (rank(Mat::from_rows(active, dim)) + 1 == dim));
        }
        // irredundancy: dropping any facet admits a point outside the cone
        for (std::size_t drop = 0; drop < c.facets.size(); ++drop) {
            HPolyhedron weak;
            for (std::size_t i = 0; i < c.facets.size(); ++i)
                if (i != drop) weak.add(c.facets[i], Rat(0));
            auto r = lp(c.facets[drop], Sense::minimize, weak);
            const bool enlarged =
                r.status == LPStatus::unbounded || (r.value && *r.value < 0);
            CHECK(enlarged);
        }
    }
}

TEST_CASE("lp: textbook cases") {
    SUBCASE("max x1 over x1 >= 0 is unbounded") {
        HPolyhedron P;
        P.add(vq("1"), Rat(0));
        auto r = lp(vq("1"), Sense::maximize, P);
        CHECK(r.status == LPStatus::unbounded);
        REQUIRE(r.certificate);
        CHECK(dot(vq("1"), *r.certificate) > 0);
    }
    SUBCASE("min f34 over ub{v1,v2} of the four-ray cone") {
        // constraints in the paper's facet order: f12 >= 0, f23 >= 2,
        // f34 >= 2, f41 >= 2
        HPolyhedron P;
        P.add(vq("-1,-1,1"), Rat(0));
        P.add(vq("1,-1,1"), Rat(2));
        P.add(vq("1,1,1"), Rat(2));
        P.add(vq("-1,1,1"), Rat(2));
        auto r = lp(vq("1,1,1"), Sense::minimize, P);
        REQUIRE(r.status == LPStatus::optimal);
        CHECK(*r.value == 2);
        // brute-force oracle over feasible basic points agrees
        BruteLP brute(P, 3);
        auto oracle = brute.best(vq("1,1,1"), false);
        REQUIRE(oracle);
        CHECK(*oracle == 2);
    }
    SUBCASE("infeasible with Farkas certificate") {
        HPolyhedron P;
        P.add(vq("1"), Rat(1));  // x >= 1
        P.add(vq("-1"), Rat(0)); // x <= 0
        auto r = lp(vq("0"), Sense::minimize, P);
        CHECK(r.status == LPStatus::infeasible);
        REQUIRE(r.certificate);
        const Vec& y = *r.certificate;
        REQUIRE(y.size() == 2);
        CHECK(y[0] >= 0);
        CHECK(y[1] >= 0);
        CHECK(y[0] * Rat(1) + y[1] * Rat(-1) == 0); // N^T y = 0
        CHECK(y[0] * Rat(1) + y[1] * Rat(0) > 0);   // b^T y > 0
    }
}

TEST_CASE("lp agrees with the brute-force vertex oracle on random bounded LPs") {
    SplitMix64 rng(777);
    int done = 0;
    while (done < 30) {
        const std::size_t dim = 1 + rng.below(3);
        HPolyhedron P;
        // box [-3, 3]^dim plus random cuts keeps everything bounded
        for (std::size_t i = 0; i < dim; ++i) {
            Vec e(dim, Rat(0));
            e[i] = 1;
            P.add(e, Rat(-3));
            P.add(vec_neg(e), Rat(-3));
        }
        for (std::size_t extra = 0; extra < 1 + rng.below(3); ++extra)
            P.add(rng.vec(dim, -3, 3), Rat(rng.int_in(-4, 0)));

        Vec obj = rng.vec(dim, -3, 3);
        auto r = lp(obj, Sense::maximize, P);
        BruteLP brute(P, dim);
        if (r.status == LPStatus::infeasible) {
            CHECK(brute.feasible_basic_points.empty());
            continue;
        }
        REQUIRE(r.status == LPStatus::optimal);
        auto oracle = brute.best(obj, true);
        REQUIRE(oracle);
        CHECK(*oracle == *r.value);
        ++done;
    }
}

TEST_CASE("polytope_is_zero") {
    SUBCASE("degenerate box in the plane") {
        HPolyhedron p;
        for (std::size_t i = 0; i < 2; ++i) {
            Vec e(2, Rat(0));
            e[i] = 1;
            p.add(e, Rat(0));          // x_i >= 0
            p.add(vec_neg(e), Rat(0)); // x_i <= 0
        }
        CHECK(polytope_is_zero(p, {vq("1,0"), vq("0,1")}));
    }
    SUBCASE("precondition: 0 must belong to p") {
        HPolyhedron p;
        p.add(vq("1,0"), Rat(1));
        CHECK_THROWS_AS(polytope_is_zero(p, {vq("1,0"), vq("0,1")}), PreconditionError);
    }
}

TEST_CASE("cone_subspace_intersection") {
    Cone four = v_to_h(four_ray_generators(), 3);
    SUBCASE("span{v1} meets the cone in the ray through v1") {
        auto sc = cone_subspace_intersection(four, Mat::from_rows({vq("1,0,1")}, 3));
        REQUIRE(sc.ambient_generators.size() == 1);
        CHECK(canonical_ray(sc.ambient_generators[0]) == vq("1,0,1"));
    }
    SUBCASE("span{(1,1,0)} meets the cone only at zero") {
        auto sc = cone_subspace_intersection(four, Mat::from_rows({vq("1,1,0")}, 3));
        CHECK(sc.ambient_generators.empty());
    }
    SUBCASE("orthant and a coordinate axis") {
        Cone orthant = v_to_h({vq("1,0"), vq("0,1")}, 2);
        auto sc = cone_subspace_intersection(orthant, Mat::from_rows({vq("1,0")}, 2));
        REQUIRE(sc.ambient_generators.size() == 1);
        CHECK(canonical_ray(sc.ambient_generators[0]) == vq("1,0"));
    }
}
