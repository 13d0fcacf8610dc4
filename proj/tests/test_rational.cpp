#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ordercone/linalg.hpp"
#include "ordercone/rng.hpp"
#include "test_support.hpp"

using namespace ordercone;

TEST_CASE("rational parsing and formatting") {
    CHECK(rat_to_string(parse_rat("3/4")) == "3/4");
    CHECK(rat_to_string(parse_rat("-6/8")) == "-3/4");
    CHECK(rat_to_string(parse_rat("7")) == "7");
    CHECK(rat_to_string(parse_rat("0/5")) == "0");
    CHECK(rat_to_string(parse_rat("+2/2")) == "1");
    CHECK(parse_rat(" 5/10 ") == Rat(1, 2));

    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rat("a"), ParseError);
    CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rat(""), ParseError);
    CHECK_THROWS_AS(parse_rat("1/2/3"), ParseError);
}

TEST_CASE("vector parsing round trip") {
    Vec v = parse_vec("1/2,-3,0");
    CHECK(v.size() == 3);
    CHECK(vec_to_string(v) == "1/2,-3,0");
}

TEST_CASE("rank examples") {
    CHECK(rank(Mat::identity(2)) == 2);
    CHECK(rank(Mat::zero(3, 3)) == 0);
    // the four generator rows of the four-ray cone span all of Q^3
    CHECK(rank(Mat::from_rows(four_ray_generators(), 3)) == 3);
}

TEST_CASE("solve examples") {
    SUBCASE("identity") {
        auto r = solve(Mat::identity(3), vq("4,5,6"));
        REQUIRE(r.consistent);
        CHECK(r.x == vq("4,5,6"));
    }
    SUBCASE("contradictory duplicate row") {
        auto r = solve(Mat::from_rows({vq("1,0"), vq("1,0")}, 2), vq("1,2"));
        CHECK_FALSE(r.consistent);
    }
    SUBCASE("four-ray facet system from the infimum test") {
        // f12(g)=0, f23(g)=0, f34(g)=2, f41(g)=0 has no solution
        auto F = Mat::from_rows({vq("-1,-1,1"), vq("1,-1,1"), vq("1,1,1"), vq("-1,1,1")}, 3);
        auto r = solve(F, vq("0,0,2,0"));
        CHECK_FALSE(r.consistent);
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(solve(Mat::identity(2), vq("1,2,3")), DimensionMismatchError);
    }
}

TEST_CASE("nullspace examples") {
    SUBCASE("coordinate hyperplane") {
        Mat N = nullspace(Mat::from_rows({vq("0,0,1")}, 3));
        REQUIRE(N.rows == 2);
        CHECK(N.row(0) == vq("1,0,0"));
        CHECK(N.row(1) == vq("0,1,0"));
    }
    SUBCASE("the non-directed band direction") {
        Mat N = nullspace(Mat::from_rows({vq("-1,-1,1"), vq("1,1,1")}, 3));
        REQUIRE(N.rows == 1);
        CHECK(N.row(0) == vq("1,-1,0"));
    }
    SUBCASE("full rank has empty nullspace") {
        CHECK(nullspace(Mat::identity(4)).rows == 0);
    }
}

TEST_CASE("linear algebra properties on random matrices") {
    SplitMix64 rng(20250809);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng.below(5);
        const std::size_t cols = 1 + rng.below(5);
        Mat M(rows, cols);
        for (auto& x : M.a) x = Rat(rng.int_in(-5, 5), rng.int_in(1, 3));

        // constructed solution: b = M x0 is always consistent and solved exactly
        Vec x0(cols);
        for (auto& x : x0) x = Rat(rng.int_in(-4, 4), rng.int_in(1, 2));
        auto r = solve(M, mat_vec(M, x0));
        REQUIRE(r.consistent);
        CHECK(mat_vec(M, r.x) == mat_vec(M, x0));

        // nullspace rows are independent, annihilated, and complete
        Mat N = nullspace(M);
        CHECK(rank(N) == N.rows);
        CHECK(rank(M) + N.rows == cols);
        for (std::size_t i = 0; i < N.rows; ++i)
            CHECK(vec_is_zero(mat_vec(M, N.row(i))));

        // canonicality: a row-equivalent matrix yields the identical basis
        Mat M2 = M;
        for (std::size_t i = 0; i + 1 < rows; ++i) {
            Rat f(rng.int_in(-2, 2));
            for (std::size_t j = 0; j < cols; ++j) M2.at(i, j) += f * M2.at(i + 1, j);
        }
        if (rows >= 1) {
            Rat scale(1 + rng.below(3));
            for (std::size_t j = 0; j < cols; ++j) M2.at(0, j) *= scale;
        }
        CHECK(nullspace(M2) == N);
    }
}

TEST_CASE("projection_onto splits the space") {
    Mat U = Mat::from_rows({vq("1,0,1")}, 3);
    Mat W = Mat::from_rows({vq("0,1,0"), vq("0,0,1")}, 3);
    Mat P = projection_onto(U, W);
    CHECK(mat_mul(P, P) == P);
    CHECK(mat_vec(P, vq("1,0,1")) == vq("1,0,1"));
    CHECK(vec_is_zero(mat_vec(P, vq("0,1,0"))));
    CHECK(vec_is_zero(mat_vec(P, vq("0,0,1"))));
}
