#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using resdist::Rat;
using resdist::RatMatrix;
using support::mat;

TEST_CASE("construction and shape") {
    RatMatrix m(2, 3);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.is_zero());
    CHECK(m.shape_string() == "2x3");
    CHECK_THROWS_AS(RatMatrix(-1, 2), std::invalid_argument);

    const RatMatrix empty;
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 0);
    CHECK(empty.is_zero());
}

TEST_CASE("zero-dimensional shapes are usable") {
    const RatMatrix a(2, 0);
    const RatMatrix b(0, 3);
    const RatMatrix prod = a * b;  // inner dimension 0: a 2x3 zero matrix
    CHECK(prod.rows() == 2);
    CHECK(prod.cols() == 3);
    CHECK(prod.is_zero());
    CHECK(RatMatrix::identity(0).rows() == 0);
    CHECK(transpose(b).rows() == 3);
    CHECK(transpose(b).cols() == 0);
    CHECK(b.sum() == Rat(0));
}

TEST_CASE("builders") {
    const RatMatrix i3 = RatMatrix::identity(3);
    CHECK(i3(0, 0) == Rat(1));
    CHECK(i3(0, 1) == Rat(0));
    CHECK(i3.sum() == Rat(3));

    const RatMatrix ones = RatMatrix::ones(2, 3);
    CHECK(ones.sum() == Rat(6));
    CHECK(ones(1, 2) == Rat(1));

    const RatMatrix f = RatMatrix::from_rows({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}});
    CHECK(f(1, 0) == Rat(3));
    CHECK_THROWS_AS(RatMatrix::from_rows({{Rat(1), Rat(2)}, {Rat(3)}}),
                    std::invalid_argument);
}

TEST_CASE("string-table builder used across the tests") {
    const RatMatrix m = mat({{"1/2", "-1/3"}, {"0", "5"}});
    CHECK(m(0, 0) == Rat(1, 2));
    CHECK(m(0, 1) == Rat(-1, 3));
    CHECK(m(1, 0) == Rat(0));
    CHECK(m(1, 1) == Rat(5));
}

TEST_CASE("indexing is bounds-checked") {
    RatMatrix m(2, 2);
    CHECK_THROWS_AS(m(2, 0), std::out_of_range);
    CHECK_THROWS_AS(m(0, -1), std::out_of_range);
    const RatMatrix& cm = m;
    CHECK_THROWS_AS(cm(0, 2), std::out_of_range);
}

TEST_CASE("equality is element-wise") {
    CHECK(mat({{"1", "2"}}) == mat({{"1", "2"}}));
    CHECK(mat({{"1", "2"}}) != mat({{"1", "3"}}));
    CHECK(mat({{"1", "2"}}) != mat({{"1"}, {"2"}}));
}

TEST_CASE("addition, subtraction, scalar multiplication") {
    const RatMatrix a = mat({{"1", "2"}, {"3", "4"}});
    const RatMatrix b = mat({{"1/2", "0"}, {"-1", "1"}});
    CHECK(a + b == mat({{"3/2", "2"}, {"2", "5"}}));
    CHECK(a - b == mat({{"1/2", "2"}, {"4", "3"}}));
    CHECK(a * Rat(1, 2) == mat({{"1/2", "1"}, {"3/2", "2"}}));
    CHECK(Rat(2) * b == mat({{"1", "0"}, {"-2", "2"}}));
    CHECK_THROWS_AS(a + mat({{"1"}}), std::invalid_argument);
    CHECK_THROWS_AS(a - mat({{"1", "2", "3"}}), std::invalid_argument);
}

TEST_CASE("matrix product") {
    const RatMatrix a = mat({{"1", "2", "3"}, {"0", "-1", "1/2"}});
    const RatMatrix b = mat({{"1", "0"}, {"2", "1"}, {"0", "4"}});
    CHECK(a * b == mat({{"5", "14"}, {"-2", "1"}}));
    CHECK(RatMatrix::identity(2) * a == a);
    CHECK_THROWS_AS(b * b, std::invalid_argument);
}

TEST_CASE("row, column, and total sums") {
    const RatMatrix a = mat({{"1", "1/2"}, {"-1", "2"}});
    CHECK(a.row_sum(0) == Rat(3, 2));
    CHECK(a.col_sum(0) == Rat(0));
    CHECK(a.sum() == Rat(5, 2));
}

TEST_CASE("transpose") {
    const RatMatrix a = mat({{"1", "2", "3"}, {"4", "5", "6"}});
    const RatMatrix t = transpose(a);
    CHECK(t.rows() == 3);
    CHECK(t.cols() == 2);
    CHECK(t(2, 1) == Rat(6));
    CHECK(transpose(t) == a);
}
