#pragma once

#include <optional>
#include <string>

#include "skewq/sign_system.hpp"

namespace skewq {

/// Bounds on rank f = min{r : f = sum_{i=1..r} u_i v_i, u_i, v_i linear}.
struct RankBounds {
    int lo = 1;
    int hi = 1;
    std::optional<int> exact;  // set when lo == hi
};

enum class HighRank { yes, no, unknown };

std::string high_rank_str(HighRank h);

/// rank f = 1 iff every triple of variables has negative sign product
/// (vacuously for n < 3).
bool is_rank_one(const SignSystem& eps);

/// lo from the rank-1 criterion, hi = min(ceil(n/2), smallest simple
/// C(A)-module dimension).
RankBounds rank_bounds(const SignSystem& eps);

/// Semisimplicity of C(A_eps), decided by the trace-form radical check
/// of the center oracle.
bool is_smooth(const SignSystem& eps);

/// rank f >= ceil(n/2)? Decided from the bounds when they suffice.
HighRank high_rank(const SignSystem& eps);

}  // namespace skewq
