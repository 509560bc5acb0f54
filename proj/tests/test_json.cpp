#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewq/json_io.hpp"

using namespace skewq;
using nlohmann::json;

TEST_CASE("sign system round trip") {
    SignSystem eps(4);
    eps.set_eps(0, 1, 1);
    eps.set_eps(2, 3, 1);
    json j = to_json(eps);
    CHECK(j["n"] == 4);
    SignSystem back = sign_system_from_json(j);
    CHECK(back.n() == 4);
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            if (i != k) CHECK(back.eps(i, k) == eps.eps(i, k));

    // Missing eps defaults to the all-minus system.
    SignSystem dflt = sign_system_from_json(json{{"n", 3}});
    CHECK(dflt.eps(0, 1) == -1);
    CHECK(dflt.eps(1, 2) == -1);
    CHECK_THROWS(sign_system_from_json(json::parse(R"({"n":"x","eps":[]})")));  // bad type
    CHECK_THROWS(sign_system_from_json(json::parse(R"({"n":2,"eps":[[1,2],[2,1]]})")));
}

TEST_CASE("polynomial round trip") {
    SignSystem eps(3);
    SkewPoly f = SkewPoly::central_quadric(eps);
    SkewPoly p = f + (SkewPoly::variable(eps, 0) * SkewPoly::variable(eps, 1)) *
                         GaussianRational(Rational(1, 2), Rational(-3, 4));
    json j = to_json(p);
    SkewPoly back = skewpoly_from_json(j);
    CHECK((back - p).is_zero());

    // Coefficient grammar: "a/b+c/d*i" and bare "i".
    json terms = json::array({json{{"coeff", "1/2-3/4*i"}, {"exps", {1, 1, 0}}},
                              json{{"coeff", "i"}, {"exps", {0, 0, 2}}}});
    SkewPoly q = poly_from_terms_json(eps, terms);
    CHECK(q.coeff(Monomial({1, 1, 0})) == GaussianRational(Rational(1, 2), Rational(-3, 4)));
    CHECK(q.coeff(Monomial({0, 0, 2})) == GaussianRational(Rational(0), Rational(1)));

    CHECK_THROWS(poly_from_terms_json(eps, json::array({json{{"coeff", "??"}, {"exps", {0, 0, 0}}}})));
    CHECK_THROWS(poly_from_terms_json(eps, json::array({json{{"coeff", "1"}, {"exps", {0, 0}}}})));
}

TEST_CASE("matrix factorization round trip") {
    SignSystem eps(2);
    SkewPoly f = SkewPoly::central_quadric(eps);
    MatrixFactorization mf = MatrixFactorization::trivial_F_phi(eps, f, {0, 1});
    json j = to_json(mf);
    CHECK(j["r"] == 2);
    CHECK(j["m1"] == json::array({2, 3}));
    MatrixFactorization back = mf_from_json(j);
    CHECK(back.r == mf.r);
    CHECK(back.m0 == mf.m0);
    CHECK(back.m1 == mf.m1);
    CHECK(verify(back).valid);
    CHECK((back.f - mf.f).is_zero());
    for (int s = 0; s < mf.r; ++s)
        for (int t = 0; t < mf.r; ++t) {
            CHECK((back.Phi0[s][t] - mf.Phi0[s][t]).is_zero());
            CHECK((back.Phi1[s][t] - mf.Phi1[s][t]).is_zero());
        }

    json broken = j;
    broken.erase("Phi1");
    CHECK_THROWS(mf_from_json(broken));
    broken = j;
    broken["m0"] = json::array({0});  // shape mismatch against r
    CHECK_THROWS(mf_from_json(broken));
}

TEST_CASE("graph round trip") {
    QuadGraph g = QuadGraph::parse("n=5; edges=1-2,2-3");
    json j = to_json(g);
    CHECK(j["n"] == 5);
    CHECK(j["edges"] == json::array({json::array({1, 2}), json::array({2, 3})}));
    CHECK(quadgraph_from_json(j) == g);
    CHECK_THROWS(quadgraph_from_json(json::parse(R"({"n":3,"edges":[[1,1]]})")));
    CHECK_THROWS(quadgraph_from_json(json::parse(R"({"n":3,"edges":[[1,9]]})")));
    CHECK_THROWS(quadgraph_from_json(json::parse(R"({"edges":[]})")));
}
