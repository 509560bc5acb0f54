#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewq/sign_system.hpp"

namespace skewq {

/// Simple graph on vertices 1..n encoding a sign system: an edge (i,j)
/// means eps_ij = +1, a non-edge means -1. Stored as an edge bitmask in
/// the lexicographic pair order (1,2),(1,3),...,(n-1,n).
class QuadGraph {
public:
    QuadGraph() = default;
    QuadGraph(int n, std::uint32_t mask = 0);

    static QuadGraph from_sign_system(const SignSystem& eps);
    /// Parses "n=6; edges=1-2,2-3,3-4" (edges part optional/empty).
    static QuadGraph parse(const std::string& text);

    int n() const { return n_; }
    std::uint32_t mask() const { return mask_; }
    int edge_count() const;
    static int pair_count(int n) { return n * (n - 1) / 2; }
    static int pair_index(int n, int i, int j);  // 1-based vertices, i != j

    bool has_edge(int i, int j) const;  // 1-based
    void set_edge(int i, int j, bool present);
    std::vector<std::pair<int, int>> edges() const;
    int degree(int v) const;
    bool is_isolated(int v) const { return degree(v) == 0; }
    std::vector<int> isolated_vertices() const;

    SignSystem to_sign_system() const;
    std::string str() const;  // the text format above

    /// Relabels: vertex v of the result is vertex perm[v-1] of *this
    /// (perm is a 1-based permutation written 0-indexed).
    QuadGraph permuted(const std::vector<int>& perm) const;

    bool operator==(const QuadGraph& o) const { return n_ == o.n_ && mask_ == o.mask_; }
    bool operator!=(const QuadGraph& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::uint32_t mask_ = 0;
};

/// Mutation at v: complement all edges incident to v.
QuadGraph mutate(const QuadGraph& g, int v);

struct NoIsolatedVertex : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Relative mutation at j by k: XOR j's neighborhood with k's, keeping
/// the pair (j,k) itself. Requires an isolated vertex outside {j,k}
/// (the hypothesis under which the operation preserves the invariants);
/// throws NoIsolatedVertex otherwise. relative_mutate_forced skips the
/// check (exploration only).
QuadGraph relative_mutate(const QuadGraph& g, int j, int k);
QuadGraph relative_mutate_forced(const QuadGraph& g, int j, int k);
bool relative_mutate_legal(const QuadGraph& g, int j, int k);

/// Removes an isolated segment (an edge whose endpoints both have
/// degree 1), smallest pair first, or nullopt when none exists.
std::optional<QuadGraph> knorrer_reduce(const QuadGraph& g);

/// When at least two isolated vertices exist, removes the smallest; the
/// caller records a x2 descriptor multiplicity.
std::optional<QuadGraph> two_points_reduce(const QuadGraph& g);

/// Minimum over all vertex relabelings of the edge bitmask.
std::uint32_t canonical_mask(const QuadGraph& g);

struct MutationClass {
    QuadGraph representative;  // min by (edge count, bitmask) in the orbit
    unsigned long long size = 0;
};

/// Orbits of all 2^{n(n-1)/2} graphs under the group generated by the n
/// mutations and all vertex relabelings. Sorted by (edge count, bitmask)
/// of the representative. 1 <= n <= 8.
std::vector<MutationClass> classify(int n);

struct ReductionStep {
    std::string op;           // "mutate", "relative_mutate", "two_points", "knorrer"
    std::vector<int> params;  // vertices involved (1-based)
    QuadGraph result;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    int multiplicity_log2 = 0;
    std::optional<QuadGraph> terminal;  // nullopt = stuck
    bool stuck() const { return !terminal.has_value(); }
    /// 2^multiplicity_log2 * N_base; nullopt when stuck.
    std::optional<long long> descriptor() const;
};

/// Greedily applies two-points and Knorrer reductions; when stuck,
/// breadth-first searches the orbit under mutations and legal relative
/// mutations (up to search_budget states) for a reducible graph.
/// Terminates at n=1 (N=1) or the n=2 single edge (N=2).
ReductionTrace reduce_to_base(const QuadGraph& g, long long search_budget = 100000);

}  // namespace skewq
