#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skewq/skewpoly.hpp"

using namespace skewq;

namespace {

SignSystem random_signs(int n, std::mt19937& rng) {
    SignSystem eps(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) eps.set_eps(i, j, (rng() & 1) ? 1 : -1);
    return eps;
}

SkewPoly random_poly(const SignSystem& ctx, std::mt19937& rng, int max_deg = 2) {
    SkewPoly p(ctx);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> var(0, ctx.n() - 1);
    int terms = 1 + (int)(rng() % 3);
    for (int t = 0; t < terms; ++t) {
        Monomial m = Monomial::one(ctx.n());
        int deg = (int)(rng() % (max_deg + 1));
        for (int d = 0; d < deg; ++d) m.exps[var(rng)] += 1;
        p.add_term(m, GaussianRational(coeff(rng), coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("word normalization accumulates commutation signs") {
    SignSystem minus(3, -1);
    auto [s1, m1] = normalize_word(minus, {1, 0});
    CHECK(s1 == -1);
    CHECK(m1 == Monomial({1, 1, 0}));
    auto [s2, m2] = normalize_word(minus, {0, 1});
    CHECK(s2 == 1);
    auto [s3, m3] = normalize_word(minus, {2, 1, 0});
    CHECK(s3 == -1);  // three inversions
    CHECK(m3 == Monomial({1, 1, 1}));

    SignSystem mixed(3, -1);
    mixed.set_eps(0, 2, 1);
    auto [s4, m4] = normalize_word(mixed, {2, 0});
    CHECK(s4 == 1);
    CHECK(m4 == Monomial({1, 0, 1}));
}

TEST_CASE("product respects the defining relations") {
    SignSystem minus(2, -1);
    SkewPoly x = SkewPoly::variable(minus, 0);
    SkewPoly y = SkewPoly::variable(minus, 1);
    CHECK(y * x == -(x * y) * GaussianRational(1));
    CHECK((x + y) * (x + y) == x * x + y * y);  // cross terms cancel

    SignSystem plus(2, 1);
    SkewPoly u = SkewPoly::variable(plus, 0);
    SkewPoly v = SkewPoly::variable(plus, 1);
    CHECK(v * u == u * v);
}

TEST_CASE("squares and the quadric are central") {
    std::mt19937 rng(7);
    for (int n = 1; n <= 5; ++n)
        for (int rep = 0; rep < 5; ++rep) {
            SignSystem eps = random_signs(n, rng);
            SkewPoly f = SkewPoly::central_quadric(eps);
            CHECK(f.is_central());
            CHECK(f.homogeneous_degree() == 2);
            for (int i = 0; i < n; ++i) {
                SkewPoly xi = SkewPoly::variable(eps, i);
                CHECK((xi * xi).is_central());
            }
        }
    // A single variable is not central when something anticommutes with it.
    SignSystem minus(2, -1);
    CHECK_FALSE(SkewPoly::variable(minus, 0).is_central());
}

TEST_CASE("multiplication is associative and distributive (randomized)") {
    std::mt19937 rng(42);
    for (int rep = 0; rep < 1000; ++rep) {
        SignSystem eps = random_signs(4, rng);
        SkewPoly a = random_poly(eps, rng), b = random_poly(eps, rng), c = random_poly(eps, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("homogeneous degree bookkeeping") {
    SignSystem minus(2, -1);
    SkewPoly z = SkewPoly::zero(minus);
    CHECK(z.homogeneous_degree() == -1);
    SkewPoly x = SkewPoly::variable(minus, 0);
    CHECK(x.homogeneous_degree() == 1);
    SkewPoly mixed = x + SkewPoly::constant(minus, GaussianRational(1));
    CHECK_FALSE(mixed.homogeneous_degree().has_value());
    CHECK(mixed.max_degree() == 1);
}

TEST_CASE("substitution checks the relations") {
    SignSystem mixed(3, -1);
    mixed.set_eps(0, 1, 1);  // x1 x2 commute, everything else anticommutes

    // Swapping x1 and x3 breaks the relation x1 x2 = x2 x1.
    LinearSubstitution swap13 = LinearSubstitution::identity(3);
    std::swap(swap13.images[0], swap13.images[2]);
    CHECK(relation_violation(mixed, swap13).has_value());
    CHECK_THROWS_AS(SkewPoly::central_quadric(mixed).substitute(swap13), RelationViolation);

    // Swapping x1 and x2 preserves all relations.
    LinearSubstitution swap12 = LinearSubstitution::identity(3);
    std::swap(swap12.images[0], swap12.images[1]);
    CHECK_FALSE(relation_violation(mixed, swap12).has_value());
    SkewPoly f = SkewPoly::central_quadric(mixed);
    CHECK(f.substitute(swap12) == f);

    // Sign flips are always endomorphisms.
    std::mt19937 rng(3);
    for (int rep = 0; rep < 20; ++rep) {
        SignSystem eps = random_signs(4, rng);
        LinearSubstitution theta = LinearSubstitution::sign_flip(4, {1, 3});
        CHECK_FALSE(relation_violation(eps, theta).has_value());
        SkewPoly p = random_poly(eps, rng);
        CHECK(p.substitute(theta).substitute(theta) == p);  // involution
    }
}

TEST_CASE("sign twist matches the substitution it shortcuts") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 50; ++rep) {
        SignSystem eps = random_signs(4, rng);
        std::vector<int> signs;
        std::vector<int> flipped;
        for (int i = 0; i < 4; ++i) {
            signs.push_back((rng() & 1) ? 1 : -1);
            if (signs.back() == -1) flipped.push_back(i);
        }
        SkewPoly p = random_poly(eps, rng);
        CHECK(p.sign_twist(signs) == p.substitute(LinearSubstitution::sign_flip(4, flipped)));
    }
}

TEST_CASE("lift embeds into an extended sign system") {
    SignSystem minus(2, -1);
    SkewPoly f = SkewPoly::central_quadric(minus);
    SignSystem bigger = minus.adjoin({1, 1});
    SkewPoly lifted = f.lift(bigger);
    CHECK(lifted.ctx().n() == 3);
    CHECK(lifted.homogeneous_degree() == 2);
    SkewPoly f3 = SkewPoly::central_quadric(bigger);
    SkewPoly x3 = SkewPoly::variable(bigger, 2);
    CHECK(f3 == lifted + x3 * x3);

    SignSystem incompatible(3, 1);
    CHECK_THROWS_AS(f.lift(incompatible), std::invalid_argument);
}
