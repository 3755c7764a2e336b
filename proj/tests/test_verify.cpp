#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using Catch::Matchers::ContainsSubstring;
using resdist::Arc;
using resdist::check_arc_bound;
using resdist::check_conjecture;
using resdist::check_identities;
using resdist::Digraph;
using resdist::fixture;
using resdist::gen_cactus;
using resdist::IdentityResult;
using resdist::Rat;
using resdist::verify_theorem_main;
using support::rat;

TEST_CASE("distance bound holds on the balanced fixtures") {
    for (const char* name : {"FIG_D", "FIG_D1", "C3", "DIGON"}) {
        const auto rep = check_conjecture(fixture(name));
        CHECK(rep.holds);
        CHECK(rep.violations.empty());
        CHECK(rep.summary.balanced);
        CHECK(rep.summary.strongly_connected);
    }
    const auto rep = check_conjecture(fixture("FIG_D"));
    CHECK(rep.summary.n == 8);
    CHECK(rep.summary.arcs == 11);
    CHECK(rep.timings_ms.count("resistance") == 1);
    CHECK(rep.timings_ms.count("distances") == 1);
    CHECK(rep.timings_ms.count("compare") == 1);
}

TEST_CASE("distance bound fails on the unbalanced fixture at exactly one pair") {
    const auto rep = check_conjecture(fixture("CEX"));
    CHECK_FALSE(rep.holds);
    CHECK_FALSE(rep.summary.balanced);
    CHECK(rep.summary.strongly_connected);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].i == 3);
    CHECK(rep.violations[0].j == 1);
    CHECK(rep.violations[0].r == rat("23/20"));
    CHECK(rep.violations[0].dist == 1);

    CHECK_THROWS_AS(check_conjecture(Digraph(2, {{1, 2}})), std::invalid_argument);
}

TEST_CASE("arc resistance bound") {
    const auto fig_d = check_arc_bound(fixture("FIG_D"));
    CHECK(fig_d.holds);
    CHECK(fig_d.worst == Arc{6, 7});
    CHECK(fig_d.worst_r == rat("7/8"));

    // All three arcs tie at 2/3; the first in sorted order is reported.
    const auto c3 = check_arc_bound(fixture("C3"));
    CHECK(c3.holds);
    CHECK(c3.worst == Arc{1, 2});
    CHECK(c3.worst_r == rat("2/3"));

    // A digon attains the bound with equality.
    const auto digon = check_arc_bound(fixture("DIGON"));
    CHECK(digon.holds);
    CHECK(digon.worst_r == Rat(1));

    CHECK_THROWS_AS(check_arc_bound(fixture("CEX")), std::invalid_argument);
    CHECK_THROWS_AS(check_arc_bound(Digraph(1, {})), std::invalid_argument);
}

TEST_CASE("identity suite passes on a balanced fixture") {
    const auto ids = check_identities(fixture("FIG_D"));
    REQUIRE(ids.size() == 6);
    for (const char* key : {"nonnegativity", "zero_diagonal", "triangle_inequality",
                            "sum_identity", "arc_cofactor_bound", "indegree_one_arc_bound"}) {
        REQUIRE(ids.count(key) == 1);
        CHECK(ids.at(key).status == IdentityResult::Status::pass);
        CHECK(ids.at(key).detail.empty());
    }
}

TEST_CASE("identity suite on an unbalanced graph skips the balanced-only checks") {
    const auto ids = check_identities(fixture("CEX"));
    CHECK(ids.at("nonnegativity").status == IdentityResult::Status::pass);
    CHECK(ids.at("zero_diagonal").status == IdentityResult::Status::pass);
    CHECK(ids.at("triangle_inequality").status == IdentityResult::Status::pass);
    for (const char* key : {"sum_identity", "arc_cofactor_bound", "indegree_one_arc_bound"}) {
        CHECK(ids.at(key).status == IdentityResult::Status::skipped);
        CHECK(ids.at(key).detail == "not balanced");
    }
    CHECK(resdist::to_string(IdentityResult::Status::pass) == std::string("pass"));
    CHECK(resdist::to_string(IdentityResult::Status::fail) == std::string("fail"));
    CHECK(resdist::to_string(IdentityResult::Status::skipped) == std::string("skipped"));

    CHECK_THROWS_AS(check_identities(Digraph(2, {{1, 2}})), std::invalid_argument);
}

TEST_CASE("identity suite passes on random cacti") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto ids = check_identities(gen_cactus(3, 2, 4, seed));
        for (const auto& [key, res] : ids)
            CHECK(res.status == IdentityResult::Status::pass);
    }
}

TEST_CASE("theorem-level verification on the two-block fixture") {
    const auto rep = verify_theorem_main(fixture("FIG_D"));
    CHECK(rep.certificate.ok);
    CHECK(rep.whole.holds);
    CHECK_FALSE(rep.fatal_inconsistency);
    REQUIRE(rep.block_checks.size() == 2);
    CHECK(rep.block_checks[0].block_index == rep.certificate.order[0]);
    CHECK(rep.block_checks[0].vertices == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(rep.block_checks[0].holds);
    CHECK(rep.block_checks[1].block_index == rep.certificate.order[1]);
    CHECK(rep.block_checks[1].vertices == std::vector<int>{6, 7, 8});
    CHECK(rep.block_checks[1].holds);
}

TEST_CASE("theorem-level verification on a single block") {
    const auto rep = verify_theorem_main(fixture("DIGON"));
    CHECK(rep.certificate.ok);
    CHECK(rep.whole.holds);
    REQUIRE(rep.block_checks.size() == 1);
    CHECK(rep.block_checks[0].vertices == std::vector<int>{1, 2});
    CHECK(rep.block_checks[0].holds);

    CHECK_THROWS_WITH(verify_theorem_main(fixture("CEX")),
                      ContainsSubstring("not balanced"));
}
