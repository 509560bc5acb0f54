#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "skewq/clifford.hpp"
#include "skewq/pointscheme.hpp"
#include "skewq/quadgraph.hpp"
#include "skewq/rank.hpp"

namespace skewq {

inline constexpr const char* kToolVersion = "skewq 1.0.0";

struct ClassRow {
    int id = 0;  // 1-based position in canonical order
    QuadGraph representative;
    unsigned long long size = 0;
    CliffordStructure clifford;
    PointScheme scheme;
    RankBounds bounds;
    HighRank high = HighRank::unknown;
    bool smooth = false;
    ReductionTrace trace;
};

struct ClassificationReport {
    int n = 0;
    std::vector<ClassRow> rows;
    std::string version = kToolVersion;

    unsigned long long total_graphs() const;
    std::string table() const;
    nlohmann::json json() const;
};

/// Full per-class analysis: mutation classes in canonical order with the
/// Clifford structure, point scheme, rank bounds and reduction trace of
/// each representative. `threads` > 1 parallelizes the per-class work.
ClassificationReport classification_report(int n, long long budget = 100000, int threads = 1);

/// One-graph analysis (same row shape).
ClassRow analyze_graph(const QuadGraph& g, long long budget = 100000);

/// Descriptor predicted from ell by the threshold pattern, or nullopt
/// when ell falls outside the stated bands:
///   n odd:  ell=0 -> 1,   1..3 -> 4,  4..10 -> 16
///   n even: ell<=1 -> 2,  2..6 -> 8,  7..15 -> 32
std::optional<long long> band_descriptor(int n, int ell);

struct ConjectureViolation {
    int class_id = 0;
    QuadGraph representative;
    int ell = 0;
    long long descriptor = 0;
};

struct ConjectureScanReport {
    int n = 0;
    int classes = 0;
    std::vector<ConjectureViolation> violations;
    std::string table() const;
    nlohmann::json json() const;
};

/// Checks every mutation class of size-n sign systems against the
/// ell -> descriptor bands.
ConjectureScanReport conjecture_scan(int n, int threads = 1);

}  // namespace skewq
