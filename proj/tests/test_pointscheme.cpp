#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "skewq/pointscheme.hpp"
#include "skewq/quadgraph.hpp"

using namespace skewq;

namespace {

SignSystem signs_of(int n, std::initializer_list<std::pair<int, int>> edges) {
    QuadGraph g(n);
    for (auto [i, j] : edges) g.set_edge(i, j, true);
    return g.to_sign_system();
}

bool hits_all(const std::vector<int>& comp, const std::vector<std::array<int, 3>>& triples) {
    for (const auto& t : triples) {
        bool hit = false;
        for (int v : t)
            if (std::find(comp.begin(), comp.end(), v) != comp.end()) hit = true;
        if (!hit) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("negative triangles") {
    CHECK(negative_triangles(SignSystem(3)) == std::vector<std::array<int, 3>>{{1, 2, 3}});
    CHECK(negative_triangles(signs_of(3, {{1, 2}, {1, 3}, {2, 3}})).empty());
    // One edge in a triangle: (+)(-)(-) = +1, still no negative triple.
    CHECK(negative_triangles(signs_of(3, {{1, 2}})).empty());
    // Two edges: (+)(+)(-) = -1.
    CHECK(negative_triangles(signs_of(3, {{1, 2}, {2, 3}})).size() == 1);
    CHECK(negative_triangles(SignSystem(5)).size() == 10);
}

TEST_CASE("empty and complete graphs on four vertices") {
    PointScheme empty = point_scheme(SignSystem(4));
    CHECK(empty.neg_triangles.size() == 4);
    CHECK(empty.components.size() == 6);  // all six coordinate pairs
    for (const auto& c : empty.components) CHECK(c.size() == 2);
    CHECK(empty.ell == 6);

    PointScheme complete = point_scheme(signs_of(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
    CHECK(complete.neg_triangles.empty());
    CHECK(complete.components == std::vector<std::vector<int>>{{}});
    CHECK(complete.ell == 0);
}

TEST_CASE("single edge on five vertices") {
    PointScheme ps = point_scheme(signs_of(5, {{1, 2}}));
    std::vector<std::vector<int>> expect = {{3, 4}, {3, 5}, {4, 5}, {1, 2, 3}, {1, 2, 4}, {1, 2, 5}};
    std::vector<std::vector<int>> got = ps.components;
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    CHECK(got == expect);
    CHECK(ps.ell == 3);  // the three components cut out by n-2 coordinates
}

TEST_CASE("six-cycle plus an isolated vertex on seven vertices") {
    PointScheme ps = point_scheme(
        signs_of(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}}));
    std::vector<std::vector<int>> expect = {
        {1, 4, 7},       {2, 5, 7},       {3, 6, 7},       {1, 2, 3, 4},    {1, 2, 3, 6},
        {1, 2, 5, 6},    {1, 4, 5, 6},    {3, 4, 5, 6},    {2, 3, 4, 5}};
    std::vector<std::vector<int>> got = ps.components;
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    CHECK(got == expect);
    CHECK(ps.ell == 0);
}

TEST_CASE("components are exactly the minimal transversals") {
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
        PointScheme ps = point_scheme(QuadGraph(5, mask).to_sign_system());
        if (ps.neg_triangles.empty()) {
            REQUIRE(ps.components == std::vector<std::vector<int>>{{}});
            continue;
        }
        for (const auto& comp : ps.components) {
            REQUIRE(hits_all(comp, ps.neg_triangles));
            // Dropping any vertex must miss some negative triple.
            for (std::size_t k = 0; k < comp.size(); ++k) {
                std::vector<int> sub = comp;
                sub.erase(sub.begin() + static_cast<long>(k));
                REQUIRE_FALSE(hits_all(sub, ps.neg_triangles));
            }
        }
        // No two components are nested.
        for (const auto& a : ps.components)
            for (const auto& b : ps.components)
                if (a != b)
                    REQUIRE_FALSE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }
}

TEST_CASE("invariant is stable under relabeling and separates classes") {
    QuadGraph h(5);
    h.set_edge(1, 2, true);
    h.set_edge(2, 3, true);
    std::string inv = point_scheme_invariant(h.to_sign_system());
    CHECK(inv == point_scheme_invariant(h.permuted({3, 5, 1, 2, 4}).to_sign_system()));

    // Two mutation classes on four vertices with equal Clifford descriptor
    // are told apart by the point scheme.
    std::string a = point_scheme_invariant(signs_of(4, {{1, 2}, {2, 3}}));
    std::string b = point_scheme_invariant(signs_of(4, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(a != b);
}

TEST_CASE("degenerate sizes") {
    CHECK(point_scheme(SignSystem(1)).ell == 0);
    CHECK(point_scheme(SignSystem(2)).ell == 1);  // P^1 itself
    PointScheme minus3 = point_scheme(SignSystem(3));
    CHECK(minus3.components == std::vector<std::vector<int>>{{1}, {2}, {3}});
    CHECK(minus3.ell == 3);
}
