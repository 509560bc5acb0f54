#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewq/clifford.hpp"
#include "skewq/quadgraph.hpp"

using namespace skewq;

namespace {

SignSystem signs_of(int n, std::initializer_list<std::pair<int, int>> edges) {
    QuadGraph g(n);
    for (auto [i, j] : edges) g.set_edge(i, j, true);
    return g.to_sign_system();
}

}  // namespace

TEST_CASE("presentation signs for n=3") {
    // Complete graph: both generators anticommute.
    CliffordPresentation all_plus = CliffordPresentation::build(signs_of(3, {{1, 2}, {1, 3}, {2, 3}}), 3);
    CHECK(all_plus.m == 2);
    CHECK(all_plus.vertices == std::vector<int>{1, 2});
    CHECK(all_plus.comm[0][1] == 1);
    // Empty graph: (-1)(-1)(-1) = -1, the generators commute.
    CliffordPresentation all_minus = CliffordPresentation::build(SignSystem(3), 3);
    CHECK(all_minus.comm[0][1] == -1);
    // Mixed: single edge (1,2) with base 3 gives (-1)(+1)(-1) = +1.
    CliffordPresentation mixed = CliffordPresentation::build(signs_of(3, {{1, 2}}), 3);
    CHECK(mixed.comm[0][1] == 1);
}

TEST_CASE("structure of small examples") {
    CliffordStructure plus3 = structure(signs_of(3, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(plus3.components == 1);
    CHECK(plus3.block == 2);
    CHECK(plus3.rankB == 2);

    CliffordStructure minus3 = structure(SignSystem(3));
    CHECK(minus3.components == 4);
    CHECK(minus3.block == 1);

    // Empty graph on n vertices: everything commutes, 2^{n-1} components.
    for (int n = 1; n <= 7; ++n) {
        CliffordStructure s = structure(SignSystem(n));
        CHECK(s.m == n - 1);
        CHECK(s.components == (1ll << (n - 1)));
        CHECK(s.block == 1);
    }

    // n=2: one generator with t^2 = 1 regardless of the sign.
    CHECK(descriptor(signs_of(2, {{1, 2}})) == 2);
    CHECK(descriptor(SignSystem(2)) == 2);

    // Dimension bookkeeping: components * block^2 = 2^m.
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
        CliffordStructure s = structure(QuadGraph(5, mask).to_sign_system());
        CHECK(s.components * s.block * s.block == (1ll << s.m));
    }
}

TEST_CASE("descriptor table rows for n=5") {
    CHECK(descriptor(SignSystem(5)) == 16);
    CHECK(descriptor(signs_of(5, {{1, 2}, {2, 3}})) == 4);
    CHECK(descriptor(signs_of(5, {{1, 2}, {2, 3}, {3, 4}})) == 1);
    CHECK(descriptor(signs_of(5, {{1, 2}})) == 4);
    CHECK(descriptor(signs_of(5, {{1, 2}, {3, 4}})) == 1);
    CHECK(descriptor(signs_of(5, {{1, 2}, {2, 3}, {4, 5}})) == 4);
    CHECK(descriptor(signs_of(5, {{1, 2}, {1, 3}, {2, 3}, {4, 5}})) == 1);
    CHECK(min_module_dim(signs_of(5, {{1, 2}, {2, 3}, {3, 4}})) == 4);
}

TEST_CASE("structure does not depend on the distinguished vertex") {
    for (int n = 2; n <= 5; ++n)
        for (std::uint32_t mask = 0; mask < (1u << QuadGraph::pair_count(n)); ++mask) {
            SignSystem eps = QuadGraph(n, mask).to_sign_system();
            CliffordStructure ref = structure(eps, 1);
            for (int base = 2; base <= n; ++base) {
                CliffordStructure s = structure(eps, base);
                REQUIRE(s.components == ref.components);
                REQUIRE(s.block == ref.block);
            }
        }
}

TEST_CASE("center oracle agrees with the rank formula") {
    for (int n = 1; n <= 5; ++n)
        for (std::uint32_t mask = 0; mask < (1u << QuadGraph::pair_count(n)); ++mask) {
            SignSystem eps = QuadGraph(n, mask).to_sign_system();
            CliffordPresentation pres = CliffordPresentation::build(eps, n);
            CenterOracleReport rep = center_oracle(pres);
            // Split semisimple algebra: #simple components = dim of center.
            REQUIRE(rep.center_dim == structure(eps).components);
            // Twisted group algebras in characteristic zero are semisimple.
            REQUIRE(rep.radical_zero);
        }
}
