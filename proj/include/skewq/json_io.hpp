#pragma once

#include <json.hpp>

#include "skewq/mf.hpp"
#include "skewq/quadgraph.hpp"
#include "skewq/skewpoly.hpp"

namespace skewq {

/// JSON forms. Sign system: {"n": int, "eps": [[+/-1,...],...]} (diagonal
/// entries accepted and ignored). Polynomial terms:
/// [{"coeff": "a/b+c/d*i", "exps": [ints]}]. Standalone polynomial:
/// {"n", "eps", "terms"}. Matrix factorization:
/// {"ctx", "f": terms, "r", "m0", "m1", "Phi0": [[terms]], "Phi1": [[terms]]}.
/// Graph: {"n": int, "edges": [[i,j],...]} mirroring the text format.

nlohmann::json to_json(const SignSystem& eps);
SignSystem sign_system_from_json(const nlohmann::json& j);

nlohmann::json terms_to_json(const SkewPoly& p);
SkewPoly poly_from_terms_json(const SignSystem& ctx, const nlohmann::json& j);

nlohmann::json to_json(const SkewPoly& p);
SkewPoly skewpoly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MatrixFactorization& mf);
MatrixFactorization mf_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QuadGraph& g);
QuadGraph quadgraph_from_json(const nlohmann::json& j);

}  // namespace skewq
