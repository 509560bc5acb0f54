#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewq/clifford.hpp"
#include "skewq/pointscheme.hpp"
#include "skewq/quadgraph.hpp"
#include "skewq/rank.hpp"

using namespace skewq;

namespace {

SignSystem signs_of(int n, std::initializer_list<std::pair<int, int>> edges) {
    QuadGraph g(n);
    for (auto [i, j] : edges) g.set_edge(i, j, true);
    return g.to_sign_system();
}

}  // namespace

TEST_CASE("rank-one criterion") {
    CHECK(is_rank_one(SignSystem(1)));
    CHECK(is_rank_one(SignSystem(2)));
    CHECK(is_rank_one(signs_of(2, {{1, 2}})));  // vacuous below three variables
    CHECK(is_rank_one(SignSystem(5)));
    CHECK_FALSE(is_rank_one(signs_of(3, {{1, 2}, {1, 3}, {2, 3}})));
    CHECK_FALSE(is_rank_one(signs_of(5, {{1, 2}})));
    // Matches "no negative triangle missing" exactly.
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
        SignSystem eps = QuadGraph(5, mask).to_sign_system();
        CHECK(is_rank_one(eps) == (negative_triangles(eps).size() == 10));
    }
}

TEST_CASE("bounds on representative examples") {
    RankBounds complete3 = rank_bounds(signs_of(3, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(complete3.lo == 2);
    CHECK(complete3.hi == 2);
    CHECK(complete3.exact == 2);

    RankBounds empty5 = rank_bounds(SignSystem(5));
    CHECK(empty5.lo == 1);
    CHECK(empty5.hi == 1);
    CHECK(empty5.exact == 1);

    // Four-vertex path inside n=6: two simple components with 4x4 blocks.
    SignSystem path = signs_of(6, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(min_module_dim(path) == 4);
    RankBounds pb = rank_bounds(path);
    CHECK(pb.lo == 2);
    CHECK(pb.hi == 3);  // ceil(6/2) caps the module-dimension bound
    CHECK_FALSE(pb.exact.has_value());

    // Consistency: lo <= hi and exact iff equal, across all n=5 systems.
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
        RankBounds b = rank_bounds(QuadGraph(5, mask).to_sign_system());
        CHECK(b.lo <= b.hi);
        CHECK(b.exact.has_value() == (b.lo == b.hi));
        CHECK(b.hi <= 3);
    }
}

TEST_CASE("high-rank decision") {
    CHECK(high_rank(signs_of(3, {{1, 2}, {1, 3}, {2, 3}})) == HighRank::yes);
    CHECK(high_rank(SignSystem(1)) == HighRank::yes);  // rank 1 = ceil(1/2)
    CHECK(high_rank(SignSystem(4)) == HighRank::no);
    CHECK(high_rank(SignSystem(5)) == HighRank::no);
    CHECK(high_rank(signs_of(6, {{1, 2}, {2, 3}, {3, 4}})) == HighRank::unknown);
    CHECK(high_rank_str(HighRank::yes) == "yes");
    CHECK(high_rank_str(HighRank::no) == "no");
    CHECK(high_rank_str(HighRank::unknown) == "unknown");
}

TEST_CASE("smoothness") {
    // Semisimplicity of the finite-dimensional companion holds for every
    // sign system in characteristic zero; the oracle confirms it.
    for (int n = 1; n <= 5; ++n)
        for (std::uint32_t mask = 0; mask < (1u << QuadGraph::pair_count(n)); ++mask)
            REQUIRE(is_smooth(QuadGraph(n, mask).to_sign_system()));
}
