#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "quotnef/linalg.hpp"
#include "quotnef/rat.hpp"

using namespace quotnef;

TEST_CASE("rat factory reduces and fixes signs") {
    CHECK(rat(3, 6) == rat(1, 2));
    CHECK(rat(-3, 6) == rat(-1, 2));
    CHECK(rat(3, -6) == rat(-1, 2));
    CHECK(rat(-3, -6) == rat(1, 2));
    CHECK(rat(0, 5) == rat(0));
    CHECK(rat(7) == rat(14, 2));
    CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("rat_parse accepts integers and fractions") {
    CHECK(rat_parse("3/4") == rat(3, 4));
    CHECK(rat_parse("-3/4") == rat(-3, 4));
    CHECK(rat_parse("6/4") == rat(3, 2));
    CHECK(rat_parse("7") == rat(7));
    CHECK(rat_parse("-7") == rat(-7));
    CHECK(rat_parse("0") == rat(0));
    CHECK(rat_parse("0/9") == rat(0));
    CHECK(rat_parse("123456789123456789/2") * rat(2) == rat_parse("123456789123456789"));
}

TEST_CASE("rat_parse rejects malformed input") {
    for (const char* bad : {"", "-", "/", "1/", "/2", "1.5", "1e3", " 1", "1 ", "a", "1/a", "--1", "1//2", "+1", "1/-2", "1/0", "-1/0"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(rat_parse(bad), std::invalid_argument);
    }
}

TEST_CASE("rat_str round trips and omits unit denominators") {
    CHECK(rat_str(rat(3, 4)) == "3/4");
    CHECK(rat_str(rat(-3, 4)) == "-3/4");
    CHECK(rat_str(rat(5)) == "5");
    CHECK(rat_str(rat(0)) == "0");
    CHECK(rat_str(rat(10, 5)) == "2");
    CHECK(rat_parse(rat_str(rat(-22, 7))) == rat(-22, 7));
}

TEST_CASE("vector helpers") {
    RatVec a{rat(1), rat(2), rat(3)};
    RatVec b{rat(1, 2), rat(0), rat(-1)};
    CHECK(vec_add(a, b) == RatVec{rat(3, 2), rat(2), rat(2)});
    CHECK(vec_sub(a, b) == RatVec{rat(1, 2), rat(2), rat(4)});
    CHECK(vec_scale(rat(-2), b) == RatVec{rat(-1), rat(0), rat(2)});
    CHECK(dot(a, b) == rat(-5, 2));
    CHECK(is_zero_vec(RatVec{rat(0), rat(0)}));
    CHECK(!is_zero_vec(b));
    CHECK_THROWS_AS(vec_add(a, RatVec{rat(1)}), std::invalid_argument);
    CHECK_THROWS_AS(dot(a, RatVec{rat(1)}), std::invalid_argument);
}

TEST_CASE("matrix construction and accessors") {
    RatMat m{{rat(1), rat(2)}, {rat(3), rat(4)}, {rat(5), rat(6)}};
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 2);
    CHECK(m.at(2, 1) == rat(6));
    CHECK(m.row(1) == RatVec{rat(3), rat(4)});
    RatMat t = m.transposed();
    CHECK(t.rows() == 2);
    CHECK(t.at(1, 2) == rat(6));
    CHECK_THROWS_AS(m.at(3, 0), std::out_of_range);
    CHECK_THROWS_AS((RatMat{{rat(1)}, {rat(1), rat(2)}}), std::invalid_argument);

    RatMat id = RatMat::identity(3);
    RatVec x{rat(7), rat(-1, 3), rat(0)};
    CHECK(mat_vec(id, x) == x);
}

TEST_CASE("matrix product") {
    RatMat a{{rat(1), rat(2)}, {rat(0), rat(1)}};
    RatMat b{{rat(1, 2), rat(0)}, {rat(3), rat(-1)}};
    RatMat c = mat_mul(a, b);
    CHECK(c.at(0, 0) == rat(13, 2));
    CHECK(c.at(0, 1) == rat(-2));
    CHECK(c.at(1, 0) == rat(3));
    CHECK(c.at(1, 1) == rat(-1));
    CHECK_THROWS_AS(mat_mul(a, RatMat(3, 2)), std::invalid_argument);
}

TEST_CASE("solve returns unique solutions exactly") {
    RatMat a{{rat(2), rat(1)}, {rat(1), rat(3)}};
    auto x = solve(a, {rat(5), rat(10)});
    REQUIRE(x);
    CHECK(*x == RatVec{rat(1), rat(3)});

    // Overdetermined but consistent.
    RatMat tall{{rat(1), rat(0)}, {rat(0), rat(1)}, {rat(1), rat(1)}};
    auto y = solve(tall, {rat(2, 3), rat(1, 3), rat(1)});
    REQUIRE(y);
    CHECK(*y == RatVec{rat(2, 3), rat(1, 3)});
}

TEST_CASE("solve rejects inconsistent and rank-deficient systems") {
    RatMat a{{rat(1), rat(1)}, {rat(2), rat(2)}};
    CHECK(!solve(a, {rat(1), rat(3)}));   // inconsistent
    CHECK(!solve(a, {rat(1), rat(2)}));   // consistent but not unique
    CHECK_THROWS_AS(solve(a, RatVec{rat(1)}), std::invalid_argument);
}

TEST_CASE("rank") {
    CHECK(rank(RatMat{{rat(1), rat(2)}, {rat(2), rat(4)}}) == 1);
    CHECK(rank(RatMat{{rat(1), rat(2)}, {rat(2), rat(5)}}) == 2);
    CHECK(rank(RatMat(3, 3)) == 0);
    CHECK(rank(RatMat::identity(4)) == 4);
}

TEST_CASE("nullspace basis solves A x = 0") {
    RatMat a{{rat(1), rat(2), rat(3)}, {rat(2), rat(4), rat(6)}};
    auto ns = nullspace(a);
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns) {
        CHECK(!is_zero_vec(v));
        CHECK(is_zero_vec(mat_vec(a, v)));
    }
    // The two basis vectors are linearly independent.
    RatMat stacked(2, 3);
    for (std::size_t j = 0; j < 3; ++j) {
        stacked.at(0, j) = ns[0][j];
        stacked.at(1, j) = ns[1][j];
    }
    CHECK(rank(stacked) == 2);

    CHECK(nullspace(RatMat::identity(3)).empty());
}
