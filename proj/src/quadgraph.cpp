#include "skewq/quadgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace skewq {

QuadGraph::QuadGraph(int n, std::uint32_t mask) : n_(n), mask_(mask) {
    if (n < 0 || n > 8) throw std::invalid_argument("vertex count must be between 0 and 8");
    if (n < 2 && mask) throw std::invalid_argument("edge bits set on a graph without pairs");
    std::uint32_t all = (n >= 2) ? ((1u << pair_count(n)) - 1) : 0;
    if (mask & ~all) throw std::invalid_argument("edge bits out of range");
}

int QuadGraph::pair_index(int n, int i, int j) {
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        throw std::out_of_range("vertex out of range");
    if (i > j) std::swap(i, j);
    --i;
    --j;  // 0-based
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

bool QuadGraph::has_edge(int i, int j) const {
    return (mask_ >> pair_index(n_, i, j)) & 1u;
}

void QuadGraph::set_edge(int i, int j, bool present) {
    std::uint32_t bit = 1u << pair_index(n_, i, j);
    if (present)
        mask_ |= bit;
    else
        mask_ &= ~bit;
}

int QuadGraph::edge_count() const { return __builtin_popcount(mask_); }

std::vector<std::pair<int, int>> QuadGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (has_edge(i, j)) out.push_back({i, j});
    return out;
}

int QuadGraph::degree(int v) const {
    int d = 0;
    for (int u = 1; u <= n_; ++u)
        if (u != v && has_edge(v, u)) ++d;
    return d;
}

std::vector<int> QuadGraph::isolated_vertices() const {
    std::vector<int> out;
    for (int v = 1; v <= n_; ++v)
        if (is_isolated(v)) out.push_back(v);
    return out;
}

QuadGraph QuadGraph::from_sign_system(const SignSystem& eps) {
    QuadGraph g(eps.n());
    for (int i = 1; i <= g.n_; ++i)
        for (int j = i + 1; j <= g.n_; ++j)
            if (eps.eps(i - 1, j - 1) == 1) g.set_edge(i, j, true);
    return g;
}

SignSystem QuadGraph::to_sign_system() const {
    SignSystem eps(n_, -1);
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (has_edge(i, j)) eps.set_eps(i - 1, j - 1, 1);
    return eps;
}

QuadGraph QuadGraph::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s.rfind("n=", 0) != 0) throw std::invalid_argument("graph must start with 'n='");
    size_t semi = s.find(';');
    std::string npart = s.substr(2, semi == std::string::npos ? std::string::npos : semi - 2);
    int n;
    try {
        size_t used;
        n = std::stoi(npart, &used);
        if (used != npart.size()) throw std::invalid_argument("");
    } catch (...) {
        throw std::invalid_argument("bad vertex count '" + npart + "'");
    }
    QuadGraph g(n);
    if (semi == std::string::npos) return g;
    std::string rest = s.substr(semi + 1);
    if (rest.empty()) return g;
    if (rest.rfind("edges=", 0) != 0) throw std::invalid_argument("expected 'edges=' after ';'");
    rest = rest.substr(6);
    if (rest.empty()) return g;
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t dash = tok.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("bad edge '" + tok + "'");
        int i, j;
        try {
            i = std::stoi(tok.substr(0, dash));
            j = std::stoi(tok.substr(dash + 1));
        } catch (...) {
            throw std::invalid_argument("bad edge '" + tok + "'");
        }
        if (i == j) throw std::invalid_argument("loop edge '" + tok + "'");
        g.set_edge(i, j, true);
    }
    return g;
}

std::string QuadGraph::str() const {
    std::ostringstream os;
    os << "n=" << n_ << "; edges=";
    bool first = true;
    for (auto [i, j] : edges()) {
        if (!first) os << ",";
        first = false;
        os << i << "-" << j;
    }
    return os.str();
}

QuadGraph QuadGraph::permuted(const std::vector<int>& perm) const {
    if ((int)perm.size() != n_) throw std::invalid_argument("permutation length mismatch");
    QuadGraph g(n_);
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (has_edge(perm[i - 1], perm[j - 1])) g.set_edge(i, j, true);
    return g;
}

namespace {

std::uint32_t vertex_star(int n, int v) {
    std::uint32_t m = 0;
    for (int u = 1; u <= n; ++u)
        if (u != v) m |= 1u << QuadGraph::pair_index(n, v, u);
    return m;
}

}  // namespace

QuadGraph mutate(const QuadGraph& g, int v) {
    if (v < 1 || v > g.n()) throw std::out_of_range("vertex out of range");
    return QuadGraph(g.n(), g.mask() ^ vertex_star(g.n(), v));
}

bool relative_mutate_legal(const QuadGraph& g, int j, int k) {
    for (int v = 1; v <= g.n(); ++v)
        if (v != j && v != k && g.is_isolated(v)) return true;
    return false;
}

QuadGraph relative_mutate_forced(const QuadGraph& g, int j, int k) {
    if (j == k) throw std::invalid_argument("relative mutation needs distinct vertices");
    if (j < 1 || j > g.n() || k < 1 || k > g.n()) throw std::out_of_range("vertex out of range");
    std::uint32_t delta = 0;
    for (int u = 1; u <= g.n(); ++u) {
        if (u == j || u == k) continue;
        if (g.has_edge(k, u)) delta |= 1u << QuadGraph::pair_index(g.n(), j, u);
    }
    return QuadGraph(g.n(), g.mask() ^ delta);
}

QuadGraph relative_mutate(const QuadGraph& g, int j, int k) {
    if (j != k && !relative_mutate_legal(g, j, k))
        throw NoIsolatedVertex("relative mutation needs an isolated vertex outside the pair");
    return relative_mutate_forced(g, j, k);
}

std::optional<QuadGraph> knorrer_reduce(const QuadGraph& g) {
    for (int i = 1; i <= g.n(); ++i)
        for (int j = i + 1; j <= g.n(); ++j) {
            if (!g.has_edge(i, j) || g.degree(i) != 1 || g.degree(j) != 1) continue;
            QuadGraph out(g.n() - 2);
            std::vector<int> keep;
            for (int v = 1; v <= g.n(); ++v)
                if (v != i && v != j) keep.push_back(v);
            for (int a = 1; a <= out.n(); ++a)
                for (int b = a + 1; b <= out.n(); ++b)
                    if (g.has_edge(keep[a - 1], keep[b - 1])) out.set_edge(a, b, true);
            return out;
        }
    return std::nullopt;
}

std::optional<QuadGraph> two_points_reduce(const QuadGraph& g) {
    auto iso = g.isolated_vertices();
    if (iso.size() < 2) return std::nullopt;
    int drop = iso[0];
    QuadGraph out(g.n() - 1);
    std::vector<int> keep;
    for (int v = 1; v <= g.n(); ++v)
        if (v != drop) keep.push_back(v);
    for (int a = 1; a <= out.n(); ++a)
        for (int b = a + 1; b <= out.n(); ++b)
            if (g.has_edge(keep[a - 1], keep[b - 1])) out.set_edge(a, b, true);
    return out;
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Precomputed bit-relabeling tables: for each permutation, map of pair
// indices. Shared per n.
struct PermTables {
    std::vector<std::vector<int>> pair_maps;  // per permutation: old pair idx -> new
};

const PermTables& perm_tables(int n) {
    static std::map<int, PermTables> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    PermTables t;
    for (const auto& p : all_permutations(n)) {
        std::vector<int> m(QuadGraph::pair_count(n));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                m[QuadGraph::pair_index(n, p[i - 1], p[j - 1])] = QuadGraph::pair_index(n, i, j);
        t.pair_maps.push_back(std::move(m));
    }
    cache[n] = std::move(t);
    return cache[n];
}

std::uint32_t apply_pair_map(std::uint32_t mask, const std::vector<int>& m) {
    std::uint32_t out = 0;
    while (mask) {
        int b = __builtin_ctz(mask);
        mask &= mask - 1;
        out |= 1u << m[b];
    }
    return out;
}

}  // namespace

std::uint32_t canonical_mask(const QuadGraph& g) {
    std::uint32_t best = g.mask();
    for (const auto& m : perm_tables(g.n()).pair_maps)
        best = std::min(best, apply_pair_map(g.mask(), m));
    return best;
}

std::vector<MutationClass> classify(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("classify supports 1 <= n <= 8");
    const int bits = QuadGraph::pair_count(n);
    const std::uint64_t total = 1ull << bits;

    // Generators: n mutations and n-1 adjacent transpositions (which
    // generate all relabelings).
    std::vector<std::uint32_t> stars;
    for (int v = 1; v <= n; ++v) stars.push_back(vertex_star(n, v));
    std::vector<std::vector<int>> swaps;  // pair-index maps
    for (int v = 1; v + 1 <= n; ++v) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 1);
        std::swap(p[v - 1], p[v]);
        std::vector<int> m(bits);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                m[QuadGraph::pair_index(n, p[i - 1], p[j - 1])] = QuadGraph::pair_index(n, i, j);
        swaps.push_back(std::move(m));
    }

    std::vector<bool> seen(total, false);
    std::vector<MutationClass> classes;
    std::vector<std::uint32_t> stack;
    for (std::uint64_t start = 0; start < total; ++start) {
        if (seen[start]) continue;
        MutationClass cls;
        std::uint32_t best = (std::uint32_t)start;
        unsigned long long size = 0;
        stack.assign(1, (std::uint32_t)start);
        seen[start] = true;
        while (!stack.empty()) {
            std::uint32_t m = stack.back();
            stack.pop_back();
            ++size;
            if (std::make_pair(__builtin_popcount(m), m) <
                std::make_pair(__builtin_popcount(best), best))
                best = m;
            auto push = [&](std::uint32_t x) {
                if (!seen[x]) {
                    seen[x] = true;
                    stack.push_back(x);
                }
            };
            for (std::uint32_t s : stars) push(m ^ s);
            for (const auto& sm : swaps) push(apply_pair_map(m, sm));
        }
        cls.representative = QuadGraph(n, best);
        cls.size = size;
        classes.push_back(cls);
    }
    std::sort(classes.begin(), classes.end(), [](const MutationClass& a, const MutationClass& b) {
        return std::make_pair(a.representative.edge_count(), a.representative.mask()) <
               std::make_pair(b.representative.edge_count(), b.representative.mask());
    });
    return classes;
}

std::optional<long long> ReductionTrace::descriptor() const {
    if (stuck()) return std::nullopt;
    long long base = terminal->n() == 1 ? 1 : 2;
    return base << multiplicity_log2;
}

namespace {

bool is_base_case(const QuadGraph& g) {
    return (g.n() == 1) || (g.n() == 2 && g.edge_count() == 1);
}

bool reducible(const QuadGraph& g) {
    return is_base_case(g) || g.isolated_vertices().size() >= 2 ||
           knorrer_reduce(g).has_value();
}

}  // namespace

ReductionTrace reduce_to_base(const QuadGraph& g, long long search_budget) {
    ReductionTrace trace;
    QuadGraph cur = g;
    for (;;) {
        if (is_base_case(cur)) {
            trace.terminal = cur;
            return trace;
        }
        if (auto tp = two_points_reduce(cur)) {
            trace.steps.push_back({"two_points", {cur.isolated_vertices()[0]}, *tp});
            trace.multiplicity_log2 += 1;
            cur = *tp;
            continue;
        }
        if (auto kn = knorrer_reduce(cur)) {
            // Recover the segment for the log.
            std::vector<int> seg;
            for (int i = 1; i <= cur.n() && seg.empty(); ++i)
                for (int j = i + 1; j <= cur.n(); ++j)
                    if (cur.has_edge(i, j) && cur.degree(i) == 1 && cur.degree(j) == 1) {
                        seg = {i, j};
                        break;
                    }
            trace.steps.push_back({"knorrer", seg, *kn});
            cur = *kn;
            continue;
        }

        // Stuck greedily: search the orbit under mutations and legal
        // relative mutations for a reducible graph.
        struct From {
            std::uint32_t parent;
            std::string op;
            std::vector<int> params;
        };
        std::unordered_map<std::uint32_t, From> from;
        std::deque<std::uint32_t> queue;
        from[cur.mask()] = {cur.mask(), "", {}};
        queue.push_back(cur.mask());
        long long visited = 1;
        std::optional<std::uint32_t> found;
        while (!queue.empty() && !found) {
            QuadGraph h(cur.n(), queue.front());
            queue.pop_front();
            auto try_push = [&](const QuadGraph& nh, const std::string& op,
                                std::vector<int> params) {
                if (found || from.count(nh.mask())) return;
                if (visited >= search_budget) return;
                ++visited;
                from[nh.mask()] = {h.mask(), op, std::move(params)};
                if (reducible(nh))
                    found = nh.mask();
                else
                    queue.push_back(nh.mask());
            };
            for (int v = 1; v <= cur.n() && !found; ++v)
                try_push(mutate(h, v), "mutate", {v});
            for (int j = 1; j <= cur.n() && !found; ++j)
                for (int k = 1; k <= cur.n() && !found; ++k) {
                    if (j == k || !relative_mutate_legal(h, j, k)) continue;
                    try_push(relative_mutate(h, j, k), "relative_mutate", {j, k});
                }
        }
        if (!found) return trace;  // stuck: terminal stays empty
        // Replay the path root -> found.
        std::vector<std::uint32_t> path;
        for (std::uint32_t m = *found; m != cur.mask(); m = from[m].parent) path.push_back(m);
        std::reverse(path.begin(), path.end());
        for (std::uint32_t m : path) {
            const From& f = from[m];
            trace.steps.push_back({f.op, f.params, QuadGraph(cur.n(), m)});
        }
        cur = QuadGraph(cur.n(), *found);
    }
}

}  // namespace skewq
