#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skewq/rational.hpp"
#include "skewq/sign_system.hpp"

namespace skewq {

/// Normal-form monomial x_1^{e_1} ... x_n^{e_n}, stored as the exponent
/// vector. Comparison is degree, then lexicographic on exponents.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}
    static Monomial one(int n) { return Monomial(std::vector<int>(n, 0)); }
    static Monomial var(int n, int i) {
        Monomial m = one(n);
        m.exps.at(i) = 1;
        return m;
    }

    int degree() const {
        int d = 0;
        for (int e : exps) d += e;
        return d;
    }

    /// Expansion as a word of variable indices, ascending.
    std::vector<int> word() const {
        std::vector<int> w;
        for (int i = 0; i < (int)exps.size(); ++i)
            for (int k = 0; k < exps[i]; ++k) w.push_back(i);
        return w;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exps < b.exps;
    }
};

/// Sorts a word of variable indices into ascending normal form by stable
/// adjacent swaps, accumulating the product of commutation signs.
/// Returns (sign, normal-form monomial).
std::pair<int, Monomial> normalize_word(const SignSystem& ctx, const std::vector<int>& word);

class SkewPoly;

/// A candidate graded algebra endomorphism x_i -> linear form.
/// images[i][j] is the coefficient of x_j in the image of x_i.
struct LinearSubstitution {
    std::vector<std::vector<GaussianRational>> images;

    static LinearSubstitution identity(int n);
    /// theta_I: x_i -> -x_i for i in I, fixes the rest.
    static LinearSubstitution sign_flip(int n, const std::vector<int>& flipped);

    int n() const { return (int)images.size(); }
};

/// The substitution does not define an algebra endomorphism: it breaks
/// some defining relation x_i x_j - eps_ij x_j x_i.
class RelationViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact element of the skew polynomial algebra over a SignSystem,
/// stored as a canonical map from normal-form monomials to nonzero
/// Gaussian-rational coefficients.
class SkewPoly {
public:
    SkewPoly() = default;
    explicit SkewPoly(SignSystem ctx) : ctx_(std::move(ctx)) {}

    static SkewPoly zero(const SignSystem& ctx) { return SkewPoly(ctx); }
    static SkewPoly constant(const SignSystem& ctx, const GaussianRational& c);
    static SkewPoly variable(const SignSystem& ctx, int i);
    /// f = x_1^2 + ... + x_n^2, the central quadric.
    static SkewPoly central_quadric(const SignSystem& ctx);
    /// Linear form sum_j coeffs[j] x_j.
    static SkewPoly linear_form(const SignSystem& ctx, const std::vector<GaussianRational>& coeffs);

    const SignSystem& ctx() const { return ctx_; }
    const std::map<Monomial, GaussianRational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    /// -1 for the zero polynomial, the common degree if homogeneous,
    /// nullopt otherwise.
    std::optional<int> homogeneous_degree() const;
    int max_degree() const;

    void add_term(const Monomial& m, const GaussianRational& c);
    GaussianRational coeff(const Monomial& m) const;

    SkewPoly operator+(const SkewPoly& o) const;
    SkewPoly operator-(const SkewPoly& o) const;
    SkewPoly operator-() const;
    SkewPoly operator*(const SkewPoly& o) const;
    SkewPoly operator*(const GaussianRational& c) const;
    SkewPoly& operator+=(const SkewPoly& o) { return *this = *this + o; }
    SkewPoly& operator-=(const SkewPoly& o) { return *this = *this - o; }

    friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a == b); }

    /// True iff x_i p = p x_i for every generator x_i.
    bool is_central() const;

    /// Image under the algebra map x_i -> sub.images[i]. Throws
    /// RelationViolation if the map does not respect the relations.
    SkewPoly substitute(const LinearSubstitution& sub) const;

    /// Entrywise sign twist x_i -> signs[i] x_i (always a graded
    /// automorphism for +/-1 signs; no relation check needed).
    SkewPoly sign_twist(const std::vector<int>& signs) const;

    /// The same polynomial viewed in an extension of the context by
    /// extra variables (exponent vectors padded with zeros). The
    /// extended context must restrict to ctx() on the first n variables.
    SkewPoly lift(const SignSystem& bigger) const;

    std::string str() const;

private:
    void check_ctx(const SkewPoly& o) const {
        if (!(ctx_ == o.ctx_)) throw std::invalid_argument("sign system mismatch");
    }

    SignSystem ctx_;
    std::map<Monomial, GaussianRational> terms_;
};

/// Checks that `sub` preserves every defining relation of ctx. Returns
/// the first violated pair (i, j) or nullopt if the map is an algebra
/// endomorphism.
std::optional<std::pair<int, int>> relation_violation(const SignSystem& ctx,
                                                      const LinearSubstitution& sub);

}  // namespace skewq
