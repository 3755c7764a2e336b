#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using resdist::Arc;
using resdist::BlockDecomposition;
using resdist::block_subgraph;
using resdist::blocks;
using resdist::class_c_certificate;
using resdist::Digraph;
using resdist::fixture;
using resdist::gen_balanced_random;
using resdist::gen_cactus;
using resdist::is_directed_cactus;
using resdist::one_point_union;
using support::brute_cut_vertices;

namespace {

std::vector<Arc> fig_d1_block() {
    return {{1, 3}, {2, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 6}, {5, 2}, {6, 5}};
}

}  // namespace

TEST_CASE("block decomposition of the two-block fixture") {
    const BlockDecomposition bd = blocks(fixture("FIG_D"));
    REQUIRE(bd.blocks.size() == 2);
    CHECK(bd.blocks[0] == fig_d1_block());
    CHECK(bd.blocks[1] == std::vector<Arc>{{6, 7}, {7, 8}, {8, 6}});
    CHECK(bd.block_vertices[0] == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(bd.block_vertices[1] == std::vector<int>{6, 7, 8});
    CHECK(bd.cut_vertices == std::vector<int>{6});
    CHECK(bd.block_cut_vertices ==
          std::vector<std::vector<int>>{{6}, {6}});
}

TEST_CASE("block decomposition separates a digon from a larger block") {
    const BlockDecomposition bd = blocks(fixture("CEX"));
    REQUIRE(bd.blocks.size() == 2);
    CHECK(bd.blocks[0] == std::vector<Arc>{{1, 3}, {3, 1}});
    CHECK(bd.blocks[1] == std::vector<Arc>{{1, 4}, {2, 1}, {4, 1}, {4, 2}});
    CHECK(bd.cut_vertices == std::vector<int>{1});
    CHECK(bd.block_cut_vertices == std::vector<std::vector<int>>{{1}, {1}});
}

TEST_CASE("two-connected graphs form a single block") {
    for (const char* name : {"FIG_D1", "C3", "DIGON"}) {
        const BlockDecomposition bd = blocks(fixture(name));
        REQUIRE(bd.blocks.size() == 1);
        CHECK(bd.blocks[0] == fixture(name).arcs());
        CHECK(bd.cut_vertices.empty());
    }
    CHECK(blocks(Digraph(1, {})).blocks.empty());
    CHECK_THROWS_AS(blocks(Digraph(4, {{1, 2}, {2, 1}, {3, 4}, {4, 3}})),
                    std::invalid_argument);
}

TEST_CASE("every arc lands in exactly one block") {
    for (const char* name : {"FIG_D", "FIG_D1", "CEX"}) {
        const Digraph d = fixture(name);
        const BlockDecomposition bd = blocks(d);
        std::vector<Arc> all;
        for (const auto& blk : bd.blocks) all.insert(all.end(), blk.begin(), blk.end());
        std::sort(all.begin(), all.end());
        CHECK(all == d.arcs());
    }
}

TEST_CASE("cut vertices match brute-force deletion") {
    for (const char* name : {"FIG_D", "FIG_D1", "CEX", "C3", "DIGON"})
        CHECK(blocks(fixture(name)).cut_vertices == brute_cut_vertices(fixture(name)));

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const int n = 3 + static_cast<int>(seed % 7);
        int extra = static_cast<int>(seed % 3);
        // On 3 vertices no balanced digraph has exactly 5 arcs (the degree
        // sequence would need an out-3 vertex), so drop that combination.
        if (n == 3 && extra == 2) extra = 1;
        const Digraph d = gen_balanced_random(n, n + extra, seed);
        CHECK(blocks(d).cut_vertices == brute_cut_vertices(d));
    }
}

TEST_CASE("block subgraphs compact labels and remember the originals") {
    const auto sub = block_subgraph({{6, 7}, {7, 8}, {8, 6}});
    CHECK(sub.original_label == std::vector<int>{6, 7, 8});
    CHECK(sub.graph == Digraph(3, {{1, 2}, {2, 3}, {3, 1}}));

    const auto big = block_subgraph(fig_d1_block());
    CHECK(big.original_label == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(big.graph == fixture("FIG_D1"));
}

TEST_CASE("one-point union glues at the chosen vertices") {
    std::vector<int> relabel;
    const Digraph merged =
        one_point_union(fixture("FIG_D1"), fixture("FIG_D2_TRIANGLE"), 6, 1, &relabel);
    CHECK(merged == fixture("FIG_D"));
    CHECK(relabel == std::vector<int>{6, 7, 8});

    // Gluing at a non-1 vertex of the second graph shifts the label map.
    std::vector<int> relabel2;
    const Digraph alt = one_point_union(fixture("C3"), fixture("C3"), 2, 3, &relabel2);
    CHECK(relabel2 == std::vector<int>{4, 5, 2});
    CHECK(alt.n() == 5);
    CHECK(alt.has_arc(5, 2));  // image of (2,3)
    CHECK(alt.has_arc(2, 4));  // image of (3,1)

    CHECK_THROWS_AS(one_point_union(fixture("C3"), fixture("C3"), 0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(one_point_union(fixture("C3"), fixture("C3"), 1, 4),
                    std::invalid_argument);
}

TEST_CASE("directed cactus recognition") {
    CHECK(is_directed_cactus(fixture("C3")));
    CHECK(is_directed_cactus(fixture("DIGON")));
    CHECK(is_directed_cactus(fixture("FIG_D2_TRIANGLE")));
    CHECK_FALSE(is_directed_cactus(fixture("FIG_D")));   // block 0 is not a bare cycle
    CHECK_FALSE(is_directed_cactus(fixture("FIG_D1")));
    CHECK_FALSE(is_directed_cactus(fixture("CEX")));     // unbalanced
    CHECK_FALSE(is_directed_cactus(Digraph(2, {{1, 2}})));  // not strongly connected

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Digraph d = gen_cactus(4, 2, 5, seed);
        CHECK(is_directed_cactus(d));
        CHECK(blocks(d).blocks.size() == 4);
    }
}

TEST_CASE("gluing certificate on the two-block fixture") {
    const auto cert =
        class_c_certificate(fixture("FIG_D"), [](const Digraph&) { return true; });
    CHECK(cert.ok);
    CHECK(cert.order == std::vector<int>{0, 1});
    CHECK(cert.attach_vertex == std::vector<int>{0, 6});
    CHECK(cert.failure_reason.empty());
}

TEST_CASE("gluing certificate reports the offending block") {
    const auto cert =
        class_c_certificate(fixture("FIG_D"), [](const Digraph& g) { return g.n() != 3; });
    CHECK_FALSE(cert.ok);
    CHECK_THAT(cert.failure_reason,
               Catch::Matchers::ContainsSubstring("block 1 (vertices {6,7,8})"));
}

TEST_CASE("gluing certificate rejects bad inputs") {
    const auto always = [](const Digraph&) { return true; };
    CHECK_THROWS_AS(class_c_certificate(fixture("CEX"), always), std::invalid_argument);
    CHECK_THROWS_AS(
        class_c_certificate(Digraph(4, {{1, 2}, {2, 1}, {3, 4}, {4, 3}}), always),
        std::invalid_argument);
}

TEST_CASE("gluing certificate follows cactus assembly") {
    for (std::uint64_t seed = 3; seed <= 8; ++seed) {
        const Digraph d = gen_cactus(3, 2, 4, seed);
        const auto cert = class_c_certificate(d, is_directed_cactus);
        CHECK(cert.ok);
        REQUIRE(cert.order.size() == cert.attach_vertex.size());
        CHECK(cert.attach_vertex.front() == 0);
        for (size_t k = 1; k < cert.attach_vertex.size(); ++k)
            CHECK(cert.attach_vertex[k] >= 1);
    }
}
