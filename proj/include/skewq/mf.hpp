#pragma once

#include <string>
#include <vector>

#include "skewq/skewpoly.hpp"

namespace skewq {

using PolyMatrix = std::vector<std::vector<SkewPoly>>;

PolyMatrix poly_matrix_mul(const PolyMatrix& a, const PolyMatrix& b);

/// Graded matrix factorization of a central quadric f: a pair of
/// homogeneous r x r matrices with Phi0 Phi1 = Phi1 Phi0 = f E, plus the
/// grading shift vectors of the two free modules. The factorization is
/// 2-periodic: with f central the normalizing automorphism is the
/// identity, so (Phi0, Phi1) determines the whole sequence.
///
/// Degree conventions: entry (s,t) of Phi0 is homogeneous of degree
/// m1[t] - m0[s]; entry (s,t) of Phi1 of degree (m0[t] + 2) - m1[s].
struct MatrixFactorization {
    SignSystem ctx;
    SkewPoly f;
    int r = 0;
    std::vector<int> m0, m1;
    PolyMatrix Phi0, Phi1;

    /// phi_F: Phi0 = E, Phi1 = f E (m1 = m0).
    static MatrixFactorization trivial_phi_F(const SignSystem& ctx, const SkewPoly& f,
                                             const std::vector<int>& shifts);
    /// _F phi: Phi0 = f E, Phi1 = E (m1 = m0 + 2).
    static MatrixFactorization trivial_F_phi(const SignSystem& ctx, const SkewPoly& f,
                                             const std::vector<int>& shifts);
    /// Rank-1 factorization (u) * (v) = f for linear forms with u v = f.
    static MatrixFactorization rank_one(const SignSystem& ctx, const SkewPoly& f,
                                        const SkewPoly& u, const SkewPoly& v);
};

struct MFVerifyReport {
    bool valid = true;
    std::vector<std::string> homogeneity_violations;
    std::vector<std::string> product_residuals;

    std::string summary() const;
};

/// Checks shift-compatible homogeneity of every entry and the two
/// product identities Phi0 Phi1 = Phi1 Phi0 = f E. Empty report <=> valid.
MFVerifyReport verify(const MatrixFactorization& mf);

/// Block-diagonal direct sum. Requires equal ctx and f.
MatrixFactorization direct_sum(const MatrixFactorization& a, const MatrixFactorization& b);

/// Morphism of matrix factorizations, determined by its degree-0 and
/// degree-1 components: M0 Phi0_src = Phi0_tgt M1 and
/// M1 Phi1_src = Phi1_tgt M0 (shifted), entries homogeneous against the
/// shift vectors.
struct MFMorphism {
    MatrixFactorization source;
    MatrixFactorization target;
    PolyMatrix M0, M1;

    static MFMorphism identity(const MatrixFactorization& mf);
    /// mu = p * id for a central homogeneous p (p = scalar or p = f).
    static MFMorphism central_scale(const MatrixFactorization& mf, const SkewPoly& p);
    MFMorphism compose_after(const MFMorphism& inner) const;  // this o inner
};

/// Returns a diagnostic string, empty when mu satisfies the morphism
/// equations and degree constraints.
std::string morphism_violation(const MFMorphism& mu);

/// Mapping cone e(mu): blocks [[Psi^{i+1}, (-1)^i mu^{i+1}], [0, Phi^i]].
/// Always a valid factorization of the same f when mu is a morphism.
MatrixFactorization cone(const MFMorphism& mu);

struct SplitRecord {
    int matrix = 0;  // 0: pivot in Phi0 (phi_F summand), 1: pivot in Phi1 (_F phi)
    int shift = 0;   // m0 shift of the removed summand
};

struct ReduceResult {
    MatrixFactorization mf;
    int split_count = 0;
    std::vector<SplitRecord> splits;
};

/// Splits off rank-1 trivial direct summands at nonzero scalar entries
/// by paired elementary row/column operations until every entry has
/// positive degree. Deterministic: leftmost-uppermost scalar in Phi0
/// first, then Phi1.
ReduceResult reduce(const MatrixFactorization& mf);

bool is_reduced(const MatrixFactorization& mf);

/// Knorrer doubling: extends the context by two degree-1 variables u, v
/// (commuting with each other, skewing against x_i by u_signs[i]) and
/// returns the rank-2r factorization of f + uv with blocks
/// [[sigma(Phi0), uE], [vE, -Phi1]] / [[sigma(Phi1), uE], [vE, -Phi0]]
/// where sigma is the sign twist by u_signs. Requires sigma(f) = f.
MatrixFactorization knorrer_extend(const MatrixFactorization& mf,
                                   const std::vector<int>& u_signs);

/// Applies a relation-respecting linear substitution to every entry and
/// to f; shifts are unchanged.
MatrixFactorization substitute(const MatrixFactorization& mf, const LinearSubstitution& sub);

/// Hilbert series of Coker(Phi0) over A = S/(f) to degree D via the
/// closed form H_A(t) (P0(t) - P1(t)) / (1 - t^2), P_i(t) = sum_s t^{m_i[s]}.
/// Requires a valid reduced factorization of the central quadric
/// (minimality of the 2-periodic resolution).
std::vector<long long> coker_hilbert(const MatrixFactorization& mf, int D);

/// Independent brute-force check: dim_k Coker(Phi0)_d computed by exact
/// linear algebra over monomial bases of A = S/(f), for d = 0..D.
std::vector<long long> coker_dims_oracle(const MatrixFactorization& mf, int D);

}  // namespace skewq
