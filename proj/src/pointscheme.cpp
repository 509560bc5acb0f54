#include "skewq/pointscheme.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skewq {

std::vector<std::array<int, 3>> negative_triangles(const SignSystem& eps) {
    std::vector<std::array<int, 3>> out;
    const int n = eps.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (eps.triangle_sign(i, j, k) == -1) out.push_back({i + 1, j + 1, k + 1});
    return out;
}

PointScheme point_scheme(const SignSystem& eps) {
    const int n = eps.n();
    if (n > 12) throw std::invalid_argument("point scheme enumeration capped at 12 variables");
    PointScheme ps;
    ps.n = n;
    ps.neg_triangles = negative_triangles(eps);

    std::vector<std::uint32_t> tri_masks;
    for (const auto& t : ps.neg_triangles)
        tri_masks.push_back((1u << (t[0] - 1)) | (1u << (t[1] - 1)) | (1u << (t[2] - 1)));

    // Minimal transversals by increasing size: a hitting set found at
    // size s is minimal iff it contains no smaller one already kept.
    std::vector<std::uint32_t> kept;
    std::vector<std::uint32_t> by_size[13];
    for (std::uint32_t S = 0; S < (1u << n); ++S) by_size[__builtin_popcount(S)].push_back(S);
    for (int size = 0; size <= n; ++size)
        for (std::uint32_t S : by_size[size]) {
            bool hits = true;
            for (std::uint32_t t : tri_masks)
                if (!(S & t)) {
                    hits = false;
                    break;
                }
            if (!hits) continue;
            bool minimal = true;
            for (std::uint32_t K : kept)
                if ((K & S) == K && K != S) {
                    minimal = false;
                    break;
                }
            if (minimal) kept.push_back(S);
        }

    std::sort(kept.begin(), kept.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    for (std::uint32_t S : kept) {
        std::vector<int> comp;
        for (int v = 0; v < n; ++v)
            if ((S >> v) & 1u) comp.push_back(v + 1);
        if ((int)comp.size() == n - 2) ++ps.ell;
        ps.components.push_back(std::move(comp));
    }
    return ps;
}

std::string point_scheme_invariant(const SignSystem& eps) {
    const int n = eps.n();
    if (n > 8) throw std::invalid_argument("point scheme invariant capped at 8 variables");
    PointScheme ps = point_scheme(eps);

    std::vector<std::uint32_t> masks;
    for (const auto& comp : ps.components) {
        std::uint32_t m = 0;
        for (int v : comp) m |= 1u << (v - 1);
        masks.push_back(m);
    }

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint32_t> best;
    bool have = false;
    do {
        std::vector<std::uint32_t> cur;
        for (std::uint32_t m : masks) {
            std::uint32_t r = 0;
            for (int v = 0; v < n; ++v)
                if ((m >> v) & 1u) r |= 1u << perm[v];
            cur.push_back(r);
        }
        std::sort(cur.begin(), cur.end());
        if (!have || cur < best) {
            best = cur;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<int> dims;
    for (std::uint32_t m : masks) dims.push_back(n - 1 - __builtin_popcount(m));
    std::sort(dims.begin(), dims.end());

    std::ostringstream os;
    os << "n" << n << ";dims";
    for (int d : dims) os << "," << d;
    os << ";comps";
    for (std::uint32_t m : best) os << "," << m;
    return os.str();
}

}  // namespace skewq
