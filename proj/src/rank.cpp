#include "skewq/rank.hpp"

#include <algorithm>

#include "skewq/clifford.hpp"

namespace skewq {

std::string high_rank_str(HighRank h) {
    switch (h) {
        case HighRank::yes: return "yes";
        case HighRank::no: return "no";
        default: return "unknown";
    }
}

bool is_rank_one(const SignSystem& eps) {
    const int n = eps.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (eps.triangle_sign(i, j, k) != -1) return false;
    return true;
}

RankBounds rank_bounds(const SignSystem& eps) {
    RankBounds rb;
    rb.lo = is_rank_one(eps) ? 1 : 2;
    int half_up = (eps.n() + 1) / 2;
    rb.hi = (int)std::min<long long>(half_up, min_module_dim(eps));
    if (rb.lo == rb.hi) rb.exact = rb.lo;
    return rb;
}

bool is_smooth(const SignSystem& eps) {
    return center_oracle(CliffordPresentation::build(eps, eps.n())).radical_zero;
}

HighRank high_rank(const SignSystem& eps) {
    RankBounds rb = rank_bounds(eps);
    int threshold = (eps.n() + 1) / 2;  // ceil(n/2) for both parities
    if (rb.lo >= threshold) return HighRank::yes;
    if (rb.hi < threshold) return HighRank::no;
    return HighRank::unknown;
}

}  // namespace skewq
