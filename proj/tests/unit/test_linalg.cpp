#include "doctest.h"
#include "rmw/linalg.hpp"

using namespace rmw;

TEST_SUITE("linalg") {
  TEST_CASE("rank, nullspace and solve over the rationals") {
    const Mat m = Mat::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
    CHECK(rank(m) == 2);
    const Mat k = nullspace(m);
    REQUIRE(k.cols() == 1);
    CHECK((m * k).is_zero());
    const auto x = solve(m, Vec{6, 12, 2});
    REQUIRE(x.has_value());
    CHECK(m * *x == Vec{6, 12, 2});
    CHECK_FALSE(solve(m, Vec{1, 0, 0}).has_value());
  }

  TEST_CASE("exact inverse with non-integral entries") {
    const Mat m = Mat::from_rows({{2, 1}, {7, 4}}, 2);
    const auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(m * *inv == Mat::identity(2));
    const Mat h = Mat::from_rows({{1, Q(1, 2)}, {Q(1, 2), Q(1, 3)}}, 2);
    const auto hinv = inverse(h);
    REQUIRE(hinv.has_value());
    CHECK((*hinv)(0, 0) == 4);
    CHECK((*hinv)(1, 1) == 12);
    CHECK_FALSE(inverse(Mat::from_rows({{1, 2}, {2, 4}}, 2)).has_value());
  }

  TEST_CASE("spans, intersections and complements") {
    const Mat a = Mat::from_cols({{1, 0, 0}, {0, 1, 0}}, 3);
    const Mat b = Mat::from_cols({{0, 1, 0}, {0, 0, 1}}, 3);
    const Mat i = intersect(a, b);
    CHECK(i.cols() == 1);
    CHECK(in_span(a, i));
    CHECK(in_span(b, i));
    const Mat c = complement_basis(a, 3);
    CHECK(c.cols() == 1);
    CHECK(rank(Mat::hcat(a, c)) == 3);
    CHECK(left_annihilator(a).rows() == 1);
  }

  TEST_CASE("empty shapes") {
    const Mat z(0, 3);
    CHECK(rank(z) == 0);
    CHECK(nullspace(z).cols() == 3);
    CHECK(Mat::identity(0).empty());
  }
}
