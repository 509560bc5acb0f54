#pragma once

#include <string>
#include <vector>

#include "skewq/sign_system.hpp"

namespace skewq {

/// Truncated integer power series, coefficients [0..D].
using Series = std::vector<long long>;

Series series_mul(const Series& a, const Series& b, int D);
/// Multiplicative inverse; a[0] must be +/-1 (all series here have
/// integer inverses).
Series series_inverse(const Series& a, int D);
/// (1 - t)^{-n} truncated to degree D.
Series series_inv_one_minus_t_pow(int n, int D);
/// (1 + t)^n truncated to degree D.
Series series_one_plus_t_pow(int n, int D);
/// a(-t).
Series series_negate_t(const Series& a);

/// Hilbert series of the skew polynomial algebra in n variables,
/// of the quadric quotient A = S/(f), and of the Koszul dual A^!,
/// truncated to degree D.
Series hilbert_S(int n, int D);
Series hilbert_A(int n, int D);
Series hilbert_A_shriek(int n, int D);

struct HilbertCheckReport {
    int n = 0;
    int max_degree = 0;
    bool ok = true;
    std::vector<std::string> failures;

    Series h_S, h_A, h_A_shriek, h_A_dagger_shriek;
};

/// Verifies the closed-form Hilbert identities degree by degree:
///   H_S = (1-t)^{-n},        H_A = H_S (1-t^2),
///   H_{A^!} = 1/H_A(-t) = (1+t)^n/(1-t^2),
///   H_{(A^dagger)^!} = 1/H_{A^dagger}(-t) = (1+t)^n/(1-t),
/// and that dim (S_eps)_d counted by direct monomial enumeration equals
/// the coefficient of H_S (the count is independent of eps).
HilbertCheckReport hilbert_checks(int n, int D);

/// Number of degree-d monomials in n variables, by direct enumeration.
long long count_monomials(int n, int d);

}  // namespace skewq
