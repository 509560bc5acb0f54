#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewq/report.hpp"

using namespace skewq;

TEST_CASE("band thresholds") {
    // Odd n.
    CHECK(band_descriptor(5, 0) == 1);
    CHECK(band_descriptor(5, 1) == 4);
    CHECK(band_descriptor(5, 3) == 4);
    CHECK(band_descriptor(5, 4) == 16);
    CHECK(band_descriptor(5, 10) == 16);
    CHECK_FALSE(band_descriptor(5, 11).has_value());
    // Even n.
    CHECK(band_descriptor(6, 0) == 2);
    CHECK(band_descriptor(6, 1) == 2);
    CHECK(band_descriptor(6, 2) == 8);
    CHECK(band_descriptor(6, 6) == 8);
    CHECK(band_descriptor(6, 7) == 32);
    CHECK(band_descriptor(6, 15) == 32);
    CHECK_FALSE(band_descriptor(6, 16).has_value());
}

TEST_CASE("classification report for n=5 matches the known table") {
    ClassificationReport rep = classification_report(5);
    CHECK(rep.n == 5);
    CHECK(rep.rows.size() == 7);
    CHECK(rep.total_graphs() == 1024);

    // Multiset of (ell, descriptor) across the seven classes.
    std::vector<std::pair<int, long long>> got;
    for (const auto& row : rep.rows)
        got.emplace_back(row.scheme.ell, row.clifford.descriptor());
    std::sort(got.begin(), got.end());
    std::vector<std::pair<int, long long>> expect = {
        {0, 1}, {0, 1}, {0, 1}, {1, 4}, {2, 4}, {3, 4}, {10, 16}};
    CHECK(got == expect);

    for (const auto& row : rep.rows) {
        CHECK(row.smooth);
        // Reduction descriptor agrees with the Clifford descriptor.
        REQUIRE_FALSE(row.trace.stuck());
        CHECK(row.trace.descriptor() == row.clifford.descriptor());
        // Every representative sits inside its stated band.
        CHECK(band_descriptor(5, row.scheme.ell) == row.clifford.descriptor());
    }
}

TEST_CASE("report output is deterministic") {
    ClassificationReport a = classification_report(4, 100000, 1);
    ClassificationReport b = classification_report(4, 100000, 2);
    CHECK(a.table() == b.table());
    CHECK(a.json().dump(2) == b.json().dump(2));
    CHECK(a.json()["version"] == kToolVersion);
    CHECK(a.table().find("skewq 1.0.0") != std::string::npos);

    ConjectureScanReport s1 = conjecture_scan(5, 1);
    ConjectureScanReport s2 = conjecture_scan(5, 2);
    CHECK(s1.table() == s2.table());
    CHECK(s1.json().dump() == s2.json().dump());
    CHECK(s1.violations.empty());
    CHECK(s1.classes == 7);
}

TEST_CASE("single-graph analysis matches the class row") {
    QuadGraph g = QuadGraph::parse("n=6; edges=1-2,2-3,3-4");
    ClassRow row = analyze_graph(g);
    CHECK(row.representative == g);
    CHECK(row.clifford.descriptor() == 2);
    CHECK(row.scheme.ell == 1);
    CHECK(row.bounds.lo == 2);
    CHECK(row.bounds.hi == 3);
    CHECK(row.high == HighRank::unknown);
    REQUIRE_FALSE(row.trace.stuck());
    CHECK(row.trace.descriptor() == 2);
}

TEST_CASE("conjecture scan flags the known n=7 exceptions") {
    ConjectureScanReport s = conjecture_scan(7, 4);
    CHECK(s.classes == 54);
    CHECK(s.violations.size() == 9);
    // The hexagon-with-apex family (ell = 0 but descriptor 4) is among them.
    bool found = false;
    for (const auto& v : s.violations)
        if (v.ell == 0 && v.descriptor == 4) found = true;
    CHECK(found);
    // The empty graph overshoots every band: ell = 21, descriptor 64.
    bool empty_found = false;
    for (const auto& v : s.violations)
        if (v.ell == 21 && v.descriptor == 64) empty_found = true;
    CHECK(empty_found);
}
