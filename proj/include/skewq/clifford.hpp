#pragma once

#include <cstdint>
#include <vector>

#include "skewq/sign_system.hpp"

namespace skewq {

/// Presentation of the finite-dimensional algebra C(A_eps) on m = n-1
/// generators t_1..t_m indexed by the vertices other than `base`:
///   t_i t_j = -comm[i][j] t_j t_i,   t_i^2 = 1,
/// so comm[i][j] = +1 means the pair anticommutes. A twisted group
/// algebra of (Z/2)^m with square-free words as basis.
struct CliffordPresentation {
    int m = 0;
    std::vector<int> vertices;           // the n-1 vertices (1-based), ascending
    std::vector<std::vector<int>> comm;  // m x m, entries +/-1, +1 on diagonal unused

    /// comm[i][j] = eps_{base,i} eps_{i,j} eps_{j,base}.
    static CliffordPresentation build(const SignSystem& eps, int base);  // base 1-based
};

struct CliffordStructure {
    int m = 0;
    std::vector<std::uint32_t> B;  // anticommutation matrix over F2, row bitsets
    int rankB = 0;                 // even
    long long components = 0;      // 2^{m - rankB}
    long long block = 0;           // 2^{rankB / 2}
    long long descriptor() const { return components; }
};

/// Wedderburn shape from the rank of the alternating form: the algebra
/// splits (the field contains sqrt(-1)) into `components` copies of
/// M_{block}(k).
CliffordStructure structure(const SignSystem& eps, int base);
CliffordStructure structure(const SignSystem& eps);  // base = n

/// Number of simple components of C(A_eps); the stable category of the
/// quadric quotient is D^b(mod k^N).
long long descriptor(const SignSystem& eps);

/// Smallest simple module dimension (the matrix block size).
long long min_module_dim(const SignSystem& eps);

struct CenterOracleReport {
    long long center_dim = 0;
    bool radical_zero = false;  // trace form of the regular rep nondegenerate
};

/// Brute force on the 2^m word basis: solves z t_i = t_i z for all i and
/// checks the trace form. Requires m <= 12.
CenterOracleReport center_oracle(const CliffordPresentation& pres);
long long center_dim_oracle(const CliffordPresentation& pres);

}  // namespace skewq
