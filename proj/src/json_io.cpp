#include "skewq/json_io.hpp"

namespace skewq {

using nlohmann::json;

json to_json(const SignSystem& eps) {
    json m = json::array();
    for (int i = 0; i < eps.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < eps.n(); ++j) row.push_back(eps.eps(i, j));
        m.push_back(row);
    }
    return json{{"n", eps.n()}, {"eps", m}};
}

SignSystem sign_system_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n")) throw std::invalid_argument("sign system needs 'n'");
    int n = j.at("n").get<int>();
    SignSystem eps(n);
    if (j.contains("eps")) {
        const json& m = j.at("eps");
        if ((int)m.size() != n) throw std::invalid_argument("eps matrix size mismatch");
        for (int i = 0; i < n; ++i) {
            if ((int)m[i].size() != n) throw std::invalid_argument("eps matrix size mismatch");
            for (int k = i + 1; k < n; ++k) {
                int v = m[i][k].get<int>();
                if (v != m[k][i].get<int>()) throw std::invalid_argument("eps not symmetric");
                eps.set_eps(i, k, v);
            }
        }
    }
    return eps;
}

json terms_to_json(const SkewPoly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back(json{{"coeff", c.str()}, {"exps", m.exps}});
    return terms;
}

SkewPoly poly_from_terms_json(const SignSystem& ctx, const json& j) {
    SkewPoly p(ctx);
    if (!j.is_array()) throw std::invalid_argument("terms must be an array");
    for (const json& t : j) {
        GaussianRational c = parse_gaussian(t.at("coeff").get<std::string>());
        std::vector<int> exps = t.at("exps").get<std::vector<int>>();
        if ((int)exps.size() != ctx.n()) throw std::invalid_argument("exponent length mismatch");
        for (int e : exps)
            if (e < 0) throw std::invalid_argument("negative exponent");
        p.add_term(Monomial(exps), c);
    }
    return p;
}

json to_json(const SkewPoly& p) {
    json j = to_json(p.ctx());
    j["terms"] = terms_to_json(p);
    return j;
}

SkewPoly skewpoly_from_json(const json& j) {
    SignSystem ctx = sign_system_from_json(j);
    return poly_from_terms_json(ctx, j.at("terms"));
}

json to_json(const MatrixFactorization& mf) {
    auto matrix = [&](const PolyMatrix& m) {
        json rows = json::array();
        for (const auto& row : m) {
            json r = json::array();
            for (const auto& p : row) r.push_back(terms_to_json(p));
            rows.push_back(r);
        }
        return rows;
    };
    return json{{"ctx", to_json(mf.ctx)}, {"f", terms_to_json(mf.f)}, {"r", mf.r},
                {"m0", mf.m0},            {"m1", mf.m1},             {"Phi0", matrix(mf.Phi0)},
                {"Phi1", matrix(mf.Phi1)}};
}

MatrixFactorization mf_from_json(const json& j) {
    MatrixFactorization mf;
    mf.ctx = sign_system_from_json(j.at("ctx"));
    mf.f = poly_from_terms_json(mf.ctx, j.at("f"));
    mf.r = j.at("r").get<int>();
    if (mf.r < 0) throw std::invalid_argument("negative rank");
    mf.m0 = j.at("m0").get<std::vector<int>>();
    mf.m1 = j.at("m1").get<std::vector<int>>();
    if ((int)mf.m0.size() != mf.r || (int)mf.m1.size() != mf.r)
        throw std::invalid_argument("shift vector length mismatch");
    auto matrix = [&](const json& rows) {
        if ((int)rows.size() != mf.r) throw std::invalid_argument("matrix size mismatch");
        PolyMatrix m;
        for (const json& row : rows) {
            if ((int)row.size() != mf.r) throw std::invalid_argument("matrix size mismatch");
            std::vector<SkewPoly> r;
            for (const json& cell : row) r.push_back(poly_from_terms_json(mf.ctx, cell));
            m.push_back(std::move(r));
        }
        return m;
    };
    mf.Phi0 = matrix(j.at("Phi0"));
    mf.Phi1 = matrix(j.at("Phi1"));
    return mf;
}

json to_json(const QuadGraph& g) {
    json edges = json::array();
    for (auto [i, j] : g.edges()) edges.push_back(json::array({i, j}));
    return json{{"n", g.n()}, {"edges", edges}};
}

QuadGraph quadgraph_from_json(const json& j) {
    QuadGraph g(j.at("n").get<int>());
    if (j.contains("edges"))
        for (const json& e : j.at("edges")) g.set_edge(e.at(0).get<int>(), e.at(1).get<int>(), true);
    return g;
}

}  // namespace skewq
