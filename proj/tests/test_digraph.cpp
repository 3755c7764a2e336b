#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using resdist::Arc;
using resdist::degrees;
using resdist::Digraph;
using resdist::DistMatrix;
using resdist::fixture;
using resdist::is_balanced;
using resdist::is_connected_underlying;
using resdist::is_strongly_connected;
using resdist::shortest_distances;

TEST_CASE("arc ordering and formatting") {
    CHECK(Arc{1, 2} < Arc{1, 3});
    CHECK(Arc{1, 3} < Arc{2, 1});
    CHECK(Arc{2, 1} == Arc{2, 1});
    CHECK(resdist::to_string(Arc{1, 2}) == "(1,2)");
}

TEST_CASE("digraph construction sorts and validates") {
    const Digraph d(3, {{3, 1}, {1, 2}, {2, 3}});
    CHECK(d.n() == 3);
    CHECK(d.arc_count() == 3);
    CHECK(d.arcs() == std::vector<Arc>{{1, 2}, {2, 3}, {3, 1}});
    CHECK(d.has_arc(1, 2));
    CHECK_FALSE(d.has_arc(2, 1));
    CHECK(d == Digraph(3, {{1, 2}, {2, 3}, {3, 1}}));
    CHECK(d != Digraph(3, {{1, 2}, {2, 3}, {3, 2}}));

    CHECK_THROWS_AS(Digraph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph(2, {{1, 3}}), std::invalid_argument);   // label out of range
    CHECK_THROWS_AS(Digraph(2, {{0, 1}}), std::invalid_argument);   // labels start at 1
    CHECK_THROWS_AS(Digraph(2, {{1, 1}}), std::invalid_argument);   // self-loop
    CHECK_THROWS_AS(Digraph(2, {{1, 2}, {1, 2}}), std::invalid_argument);  // duplicate
}

TEST_CASE("degree bookkeeping") {
    const auto deg_cex = degrees(fixture("CEX"));
    CHECK(deg_cex.in == std::vector<int>{3, 1, 1, 1});
    CHECK(deg_cex.out == std::vector<int>{2, 1, 1, 2});

    const auto deg_d = degrees(fixture("FIG_D"));
    CHECK(deg_d.out == std::vector<int>{1, 2, 2, 1, 1, 2, 1, 1});
    CHECK(deg_d.in == deg_d.out);
}

TEST_CASE("balance predicate") {
    CHECK(is_balanced(fixture("FIG_D")));
    CHECK(is_balanced(fixture("FIG_D1")));
    CHECK(is_balanced(fixture("DIGON")));
    CHECK_FALSE(is_balanced(fixture("CEX")));
    CHECK(is_balanced(Digraph(1, {})));  // vacuously balanced
}

TEST_CASE("strong connectivity") {
    CHECK(is_strongly_connected(fixture("FIG_D")));
    CHECK(is_strongly_connected(fixture("CEX")));
    CHECK(is_strongly_connected(Digraph(1, {})));
    CHECK_FALSE(is_strongly_connected(Digraph(2, {{1, 2}})));

    // Dropping the arc (8,6) strands vertices 7 and 8's return path.
    std::vector<Arc> arcs = fixture("FIG_D").arcs();
    arcs.erase(std::find(arcs.begin(), arcs.end(), Arc{8, 6}));
    CHECK_FALSE(is_strongly_connected(Digraph(8, std::move(arcs))));
}

TEST_CASE("underlying connectivity") {
    CHECK(is_connected_underlying(fixture("FIG_D")));
    CHECK(is_connected_underlying(Digraph(2, {{1, 2}})));  // one arc joins both vertices
    CHECK_FALSE(is_connected_underlying(Digraph(4, {{1, 2}, {2, 1}, {3, 4}, {4, 3}})));
}

TEST_CASE("breadth-first distances") {
    const DistMatrix c3 = shortest_distances(fixture("C3"));
    CHECK(c3(0, 0) == 0);
    CHECK(c3(0, 1) == 1);
    CHECK(c3(1, 0) == 2);  // takes the long way around the cycle

    const DistMatrix d = shortest_distances(fixture("FIG_D"));
    const std::vector<std::int64_t> row1{0, 2, 1, 2, 4, 3, 4, 5};
    for (int j = 0; j < 8; ++j) CHECK(d(0, j) == row1[j]);

    const DistMatrix partial = shortest_distances(Digraph(2, {{1, 2}}));
    CHECK(partial(0, 1) == 1);
    CHECK(partial(1, 0) == DistMatrix::kInf);
}

TEST_CASE("distance matrix bounds checking") {
    DistMatrix m(2);
    CHECK(m.n() == 2);
    m(1, 1) = 7;
    CHECK(m(1, 1) == 7);
    CHECK(m(0, 1) == DistMatrix::kInf);
    CHECK_THROWS_AS(m(2, 0), std::out_of_range);
    CHECK_THROWS_AS(m(0, -1), std::out_of_range);
}
