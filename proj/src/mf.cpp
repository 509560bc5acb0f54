#include "skewq/mf.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "skewq/hilbert.hpp"

namespace skewq {

namespace {

SkewPoly zero_like(const MatrixFactorization& mf) { return SkewPoly::zero(mf.ctx); }

PolyMatrix identity_matrix(const SignSystem& ctx, int r, const SkewPoly& diag) {
    PolyMatrix m(r, std::vector<SkewPoly>(r, SkewPoly::zero(ctx)));
    for (int i = 0; i < r; ++i) m[i][i] = diag;
    return m;
}

bool entry_fits(const SkewPoly& p, int expected_degree) {
    if (p.is_zero()) return true;
    auto d = p.homogeneous_degree();
    return d.has_value() && *d == expected_degree;
}

std::vector<Monomial> degree_basis(const SignSystem& ctx, int d) {
    // All normal-form monomials of S of degree d.
    std::vector<Monomial> out;
    if (d < 0) return out;
    if (ctx.n() == 0) {
        if (d == 0) out.push_back(Monomial(std::vector<int>{}));
        return out;
    }
    std::vector<int> exps(ctx.n(), 0);
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == ctx.n() - 1) {
            exps[var] = left;
            out.push_back(Monomial(exps));
            exps[var] = 0;
            return;
        }
        for (int e = 0; e <= left; ++e) {
            exps[var] = e;
            self(self, var + 1, left - e);
        }
        exps[var] = 0;
    };
    rec(rec, 0, d);
    return out;
}

int matrix_rank(std::vector<std::vector<GaussianRational>>& m) {
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (!m[i][col].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        GaussianRational inv = GaussianRational(1) / m[rank][col];
        for (int j = col; j < cols; ++j) m[rank][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            GaussianRational c = m[i][col];
            for (int j = col; j < cols; ++j) m[i][j] -= c * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

PolyMatrix poly_matrix_mul(const PolyMatrix& a, const PolyMatrix& b) {
    int ra = (int)a.size();
    int inner = ra ? (int)a[0].size() : 0;
    int cb = (inner && !b.empty()) ? (int)b[0].size() : 0;
    if ((int)b.size() != inner) throw std::invalid_argument("matrix shape mismatch");
    if (ra == 0 || cb == 0) return PolyMatrix(ra, std::vector<SkewPoly>(cb));
    PolyMatrix out(ra, std::vector<SkewPoly>(cb, SkewPoly::zero(a[0][0].ctx())));
    for (int i = 0; i < ra; ++i)
        for (int k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < cb; ++j) {
                if (b[k][j].is_zero()) continue;
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    return out;
}

MatrixFactorization MatrixFactorization::trivial_phi_F(const SignSystem& ctx, const SkewPoly& f,
                                                       const std::vector<int>& shifts) {
    MatrixFactorization mf;
    mf.ctx = ctx;
    mf.f = f;
    mf.r = (int)shifts.size();
    mf.m0 = shifts;
    mf.m1 = shifts;
    mf.Phi0 = identity_matrix(ctx, mf.r, SkewPoly::constant(ctx, GaussianRational(1)));
    mf.Phi1 = identity_matrix(ctx, mf.r, f);
    return mf;
}

MatrixFactorization MatrixFactorization::trivial_F_phi(const SignSystem& ctx, const SkewPoly& f,
                                                       const std::vector<int>& shifts) {
    MatrixFactorization mf;
    mf.ctx = ctx;
    mf.f = f;
    mf.r = (int)shifts.size();
    mf.m0 = shifts;
    mf.m1 = shifts;
    for (int& m : mf.m1) m += 2;
    mf.Phi0 = identity_matrix(ctx, mf.r, f);
    mf.Phi1 = identity_matrix(ctx, mf.r, SkewPoly::constant(ctx, GaussianRational(1)));
    return mf;
}

MatrixFactorization MatrixFactorization::rank_one(const SignSystem& ctx, const SkewPoly& f,
                                                  const SkewPoly& u, const SkewPoly& v) {
    MatrixFactorization mf;
    mf.ctx = ctx;
    mf.f = f;
    mf.r = 1;
    mf.m0 = {0};
    mf.m1 = {1};
    mf.Phi0 = {{u}};
    mf.Phi1 = {{v}};
    return mf;
}

std::string MFVerifyReport::summary() const {
    if (valid) return "valid";
    std::ostringstream os;
    os << "invalid:";
    for (const auto& s : homogeneity_violations) os << "\n  homogeneity: " << s;
    for (const auto& s : product_residuals) os << "\n  residual: " << s;
    return os.str();
}

MFVerifyReport verify(const MatrixFactorization& mf) {
    MFVerifyReport rep;
    if ((int)mf.m0.size() != mf.r || (int)mf.m1.size() != mf.r ||
        (int)mf.Phi0.size() != mf.r || (int)mf.Phi1.size() != mf.r)
        throw std::invalid_argument("matrix factorization shape mismatch");
    for (int s = 0; s < mf.r; ++s)
        if ((int)mf.Phi0[s].size() != mf.r || (int)mf.Phi1[s].size() != mf.r)
            throw std::invalid_argument("matrix factorization shape mismatch");
    auto fd = mf.f.homogeneous_degree();
    if (!fd || *fd != 2 || !mf.f.is_central())
        throw std::invalid_argument("f must be a central homogeneous quadric");

    for (int s = 0; s < mf.r; ++s)
        for (int t = 0; t < mf.r; ++t) {
            if (!entry_fits(mf.Phi0[s][t], mf.m1[t] - mf.m0[s])) {
                rep.valid = false;
                rep.homogeneity_violations.push_back(
                    "Phi0[" + std::to_string(s + 1) + "][" + std::to_string(t + 1) +
                    "] is not homogeneous of degree " + std::to_string(mf.m1[t] - mf.m0[s]));
            }
            if (!entry_fits(mf.Phi1[s][t], mf.m0[t] + 2 - mf.m1[s])) {
                rep.valid = false;
                rep.homogeneity_violations.push_back(
                    "Phi1[" + std::to_string(s + 1) + "][" + std::to_string(t + 1) +
                    "] is not homogeneous of degree " + std::to_string(mf.m0[t] + 2 - mf.m1[s]));
            }
        }

    auto check_product = [&](const PolyMatrix& a, const PolyMatrix& b, const char* name) {
        PolyMatrix prod = poly_matrix_mul(a, b);
        for (int s = 0; s < mf.r; ++s)
            for (int t = 0; t < mf.r; ++t) {
                SkewPoly want = (s == t) ? mf.f : zero_like(mf);
                SkewPoly res = prod[s][t] - want;
                if (!res.is_zero()) {
                    rep.valid = false;
                    rep.product_residuals.push_back(std::string(name) + "[" +
                                                    std::to_string(s + 1) + "][" +
                                                    std::to_string(t + 1) + "] = " + res.str());
                }
            }
    };
    check_product(mf.Phi0, mf.Phi1, "Phi0*Phi1 - f*E");
    check_product(mf.Phi1, mf.Phi0, "Phi1*Phi0 - f*E");
    return rep;
}

MatrixFactorization direct_sum(const MatrixFactorization& a, const MatrixFactorization& b) {
    if (!(a.ctx == b.ctx)) throw std::invalid_argument("direct_sum: sign system mismatch");
    if (a.f != b.f) throw std::invalid_argument("direct_sum: central quadric mismatch");
    MatrixFactorization out;
    out.ctx = a.ctx;
    out.f = a.f;
    out.r = a.r + b.r;
    out.m0 = a.m0;
    out.m0.insert(out.m0.end(), b.m0.begin(), b.m0.end());
    out.m1 = a.m1;
    out.m1.insert(out.m1.end(), b.m1.begin(), b.m1.end());
    auto block = [&](const PolyMatrix& x, const PolyMatrix& y) {
        PolyMatrix m(out.r, std::vector<SkewPoly>(out.r, SkewPoly::zero(out.ctx)));
        for (int i = 0; i < a.r; ++i)
            for (int j = 0; j < a.r; ++j) m[i][j] = x[i][j];
        for (int i = 0; i < b.r; ++i)
            for (int j = 0; j < b.r; ++j) m[a.r + i][a.r + j] = y[i][j];
        return m;
    };
    out.Phi0 = block(a.Phi0, b.Phi0);
    out.Phi1 = block(a.Phi1, b.Phi1);
    return out;
}

MFMorphism MFMorphism::identity(const MatrixFactorization& mf) {
    MFMorphism mu;
    mu.source = mf;
    mu.target = mf;
    SkewPoly one = SkewPoly::constant(mf.ctx, GaussianRational(1));
    mu.M0 = identity_matrix(mf.ctx, mf.r, one);
    mu.M1 = identity_matrix(mf.ctx, mf.r, one);
    return mu;
}

MFMorphism MFMorphism::central_scale(const MatrixFactorization& mf, const SkewPoly& p) {
    auto d = p.homogeneous_degree();
    if (!d || !p.is_central())
        throw std::invalid_argument("central_scale needs a central homogeneous multiplier");
    int deg = p.is_zero() ? 0 : *d;
    MFMorphism mu;
    mu.source = mf;
    mu.target = mf;
    for (int& m : mu.target.m0) m -= deg;
    for (int& m : mu.target.m1) m -= deg;
    mu.M0 = identity_matrix(mf.ctx, mf.r, p);
    mu.M1 = identity_matrix(mf.ctx, mf.r, p);
    return mu;
}

MFMorphism MFMorphism::compose_after(const MFMorphism& inner) const {
    MFMorphism out;
    out.source = inner.source;
    out.target = target;
    out.M0 = poly_matrix_mul(M0, inner.M0);
    out.M1 = poly_matrix_mul(M1, inner.M1);
    return out;
}

std::string morphism_violation(const MFMorphism& mu) {
    const auto& src = mu.source;
    const auto& tgt = mu.target;
    if (!(src.ctx == tgt.ctx) || src.f != tgt.f) return "source/target live over different data";
    if ((int)mu.M0.size() != tgt.r || (int)mu.M1.size() != tgt.r)
        return "morphism matrix shape mismatch";
    for (const auto& row : mu.M0)
        if ((int)row.size() != src.r) return "morphism matrix shape mismatch";
    for (const auto& row : mu.M1)
        if ((int)row.size() != src.r) return "morphism matrix shape mismatch";

    for (int s = 0; s < tgt.r; ++s)
        for (int t = 0; t < src.r; ++t) {
            if (!entry_fits(mu.M0[s][t], src.m0[t] - tgt.m0[s]))
                return "M0 entry (" + std::to_string(s + 1) + "," + std::to_string(t + 1) +
                       ") has wrong degree";
            if (!entry_fits(mu.M1[s][t], src.m1[t] - tgt.m1[s]))
                return "M1 entry (" + std::to_string(s + 1) + "," + std::to_string(t + 1) +
                       ") has wrong degree";
        }

    // M0 Phi0_src = Phi0_tgt M1 and M1 Phi1_src = Phi1_tgt M0.
    PolyMatrix l0 = poly_matrix_mul(mu.M0, src.Phi0);
    PolyMatrix r0 = poly_matrix_mul(tgt.Phi0, mu.M1);
    PolyMatrix l1 = poly_matrix_mul(mu.M1, src.Phi1);
    PolyMatrix r1 = poly_matrix_mul(tgt.Phi1, mu.M0);
    for (int s = 0; s < tgt.r; ++s)
        for (int t = 0; t < src.r; ++t) {
            if (l0[s][t] != r0[s][t]) return "square M0 Phi0 = Phi0 M1 does not commute";
            if (l1[s][t] != r1[s][t]) return "square M1 Phi1 = Phi1 M0 does not commute";
        }
    return "";
}

MatrixFactorization cone(const MFMorphism& mu) {
    std::string bad = morphism_violation(mu);
    if (!bad.empty()) throw std::invalid_argument("cone: not a morphism: " + bad);
    const auto& src = mu.source;
    const auto& tgt = mu.target;
    MatrixFactorization out;
    out.ctx = src.ctx;
    out.f = src.f;
    out.r = tgt.r + src.r;
    out.m0 = tgt.m1;
    out.m0.insert(out.m0.end(), src.m0.begin(), src.m0.end());
    out.m1 = tgt.m0;
    for (int& m : out.m1) m += 2;
    out.m1.insert(out.m1.end(), src.m1.begin(), src.m1.end());

    out.Phi0.assign(out.r, std::vector<SkewPoly>(out.r, SkewPoly::zero(out.ctx)));
    out.Phi1.assign(out.r, std::vector<SkewPoly>(out.r, SkewPoly::zero(out.ctx)));
    for (int i = 0; i < tgt.r; ++i)
        for (int j = 0; j < tgt.r; ++j) {
            out.Phi0[i][j] = tgt.Phi1[i][j];
            out.Phi1[i][j] = tgt.Phi0[i][j];
        }
    for (int i = 0; i < tgt.r; ++i)
        for (int j = 0; j < src.r; ++j) {
            out.Phi0[i][tgt.r + j] = mu.M1[i][j];
            out.Phi1[i][tgt.r + j] = -mu.M0[i][j];
        }
    for (int i = 0; i < src.r; ++i)
        for (int j = 0; j < src.r; ++j) {
            out.Phi0[tgt.r + i][tgt.r + j] = src.Phi0[i][j];
            out.Phi1[tgt.r + i][tgt.r + j] = src.Phi1[i][j];
        }
    return out;
}

bool is_reduced(const MatrixFactorization& mf) {
    const Monomial one = Monomial::one(mf.ctx.n());
    for (int s = 0; s < mf.r; ++s)
        for (int t = 0; t < mf.r; ++t)
            if (!mf.Phi0[s][t].coeff(one).is_zero() || !mf.Phi1[s][t].coeff(one).is_zero())
                return false;
    return true;
}

namespace {

struct ScalarEntry {
    int which;  // 0: Phi0, 1: Phi1
    int s, t;
    GaussianRational c;
};

std::optional<ScalarEntry> find_scalar(const MatrixFactorization& mf) {
    const Monomial one = Monomial::one(mf.ctx.n());
    for (int which = 0; which < 2; ++which) {
        const PolyMatrix& m = which == 0 ? mf.Phi0 : mf.Phi1;
        for (int s = 0; s < mf.r; ++s)
            for (int t = 0; t < mf.r; ++t) {
                if (m[s][t].is_zero()) continue;
                auto d = m[s][t].homogeneous_degree();
                if (d && *d == 0) return ScalarEntry{which, s, t, m[s][t].coeff(one)};
            }
    }
    return std::nullopt;
}

void erase_index(std::vector<int>& v, int i) { v.erase(v.begin() + i); }

void erase_row_col(PolyMatrix& m, int row, int col) {
    m.erase(m.begin() + row);
    for (auto& r : m) r.erase(r.begin() + col);
}

}  // namespace

ReduceResult reduce(const MatrixFactorization& input) {
    MatrixFactorization mf = input;
    int splits = 0;
    std::vector<SplitRecord> records;
    for (;;) {
        auto pivot = find_scalar(mf);
        if (!pivot) break;
        // Orient so the pivot sits in P; Q is the complementary matrix.
        PolyMatrix& P = pivot->which == 0 ? mf.Phi0 : mf.Phi1;
        PolyMatrix& Q = pivot->which == 0 ? mf.Phi1 : mf.Phi0;
        const int s = pivot->s, t = pivot->t;
        GaussianRational cinv = GaussianRational(1) / pivot->c;

        // Clear row s of P by column operations, mirrored inversely on Q.
        for (int t2 = 0; t2 < mf.r; ++t2) {
            if (t2 == t || P[s][t2].is_zero()) continue;
            SkewPoly q = P[s][t2] * cinv;
            for (int i = 0; i < mf.r; ++i) P[i][t2] -= P[i][t] * q;
            for (int j = 0; j < mf.r; ++j) Q[t][j] += q * Q[t2][j];
        }
        // Clear column t of P by row operations, mirrored inversely on Q.
        for (int s2 = 0; s2 < mf.r; ++s2) {
            if (s2 == s || P[s2][t].is_zero()) continue;
            SkewPoly p = P[s2][t] * cinv;
            for (int j = 0; j < mf.r; ++j) P[s2][j] -= p * P[s][j];
            for (int i = 0; i < mf.r; ++i) Q[i][s] += Q[i][s2] * p;
        }
        // The product identities force the complementary row/column of Q
        // to vanish off the pivot.
        for (int j = 0; j < mf.r; ++j)
            if (j != s && !Q[t][j].is_zero())
                throw std::logic_error("reduce: residual entry after split (invalid input?)");
        for (int i = 0; i < mf.r; ++i)
            if (i != t && !Q[i][s].is_zero())
                throw std::logic_error("reduce: residual entry after split (invalid input?)");

        erase_row_col(P, s, t);
        erase_row_col(Q, t, s);
        if (pivot->which == 0) {
            records.push_back({0, mf.m0[s]});
            erase_index(mf.m0, s);
            erase_index(mf.m1, t);
        } else {
            records.push_back({1, mf.m0[t]});
            erase_index(mf.m1, s);
            erase_index(mf.m0, t);
        }
        --mf.r;
        ++splits;
    }
    return {mf, splits, records};
}

MatrixFactorization knorrer_extend(const MatrixFactorization& mf,
                                   const std::vector<int>& u_signs) {
    if ((int)u_signs.size() != mf.ctx.n())
        throw std::invalid_argument("knorrer_extend: sign vector length mismatch");
    if (mf.f.sign_twist(u_signs) != mf.f)
        throw std::invalid_argument("knorrer_extend: sign twist does not fix f");

    SignSystem ctx_u = mf.ctx.adjoin(u_signs);
    std::vector<int> v_signs = u_signs;
    v_signs.push_back(1);  // u and v commute
    SignSystem ctx_uv = ctx_u.adjoin(v_signs);
    const int n = mf.ctx.n();
    SkewPoly u = SkewPoly::variable(ctx_uv, n);
    SkewPoly v = SkewPoly::variable(ctx_uv, n + 1);

    MatrixFactorization out;
    out.ctx = ctx_uv;
    out.f = mf.f.lift(ctx_uv) + u * v;
    out.r = 2 * mf.r;
    out.m0 = mf.m0;
    for (int m : mf.m1) out.m0.push_back(m - 1);
    out.m1 = mf.m1;
    for (int m : mf.m0) out.m1.push_back(m + 1);

    auto lift_twist = [&](const SkewPoly& p) { return p.sign_twist(u_signs).lift(ctx_uv); };
    auto lift = [&](const SkewPoly& p) { return p.lift(ctx_uv); };

    out.Phi0.assign(out.r, std::vector<SkewPoly>(out.r, SkewPoly::zero(ctx_uv)));
    out.Phi1.assign(out.r, std::vector<SkewPoly>(out.r, SkewPoly::zero(ctx_uv)));
    for (int i = 0; i < mf.r; ++i)
        for (int j = 0; j < mf.r; ++j) {
            out.Phi0[i][j] = lift_twist(mf.Phi0[i][j]);
            out.Phi0[mf.r + i][mf.r + j] = -lift(mf.Phi1[i][j]);
            out.Phi1[i][j] = lift_twist(mf.Phi1[i][j]);
            out.Phi1[mf.r + i][mf.r + j] = -lift(mf.Phi0[i][j]);
        }
    for (int i = 0; i < mf.r; ++i) {
        out.Phi0[i][mf.r + i] = u;
        out.Phi0[mf.r + i][i] = v;
        out.Phi1[i][mf.r + i] = u;
        out.Phi1[mf.r + i][i] = v;
    }
    return out;
}

MatrixFactorization substitute(const MatrixFactorization& mf, const LinearSubstitution& sub) {
    if (auto bad = relation_violation(mf.ctx, sub))
        throw RelationViolation("substitution violates relation between x" +
                                std::to_string(bad->first + 1) + " and x" +
                                std::to_string(bad->second + 1));
    MatrixFactorization out = mf;
    out.f = mf.f.substitute(sub);
    for (int s = 0; s < mf.r; ++s)
        for (int t = 0; t < mf.r; ++t) {
            out.Phi0[s][t] = mf.Phi0[s][t].substitute(sub);
            out.Phi1[s][t] = mf.Phi1[s][t].substitute(sub);
        }
    return out;
}

std::vector<long long> coker_hilbert(const MatrixFactorization& mf, int D) {
    if (!verify(mf).valid) throw std::invalid_argument("coker_hilbert: invalid factorization");
    if (!is_reduced(mf)) throw std::invalid_argument("coker_hilbert: factorization not reduced");
    int mmin = 0;
    for (int m : mf.m0) mmin = std::min(mmin, m);
    for (int m : mf.m1) mmin = std::min(mmin, m);
    int Dw = D - mmin;
    Series w = series_mul(hilbert_A(mf.ctx.n(), Dw), series_inverse({1, 0, -1}, Dw), Dw);
    std::vector<long long> out(D + 1, 0);
    auto accumulate = [&](const std::vector<int>& shifts, long long sgn) {
        for (int m : shifts)
            for (int d = 0; d <= D; ++d)
                if (d - m >= 0 && d - m <= Dw) out[d] += sgn * w[d - m];
    };
    accumulate(mf.m0, +1);
    accumulate(mf.m1, -1);
    return out;
}

std::vector<long long> coker_dims_oracle(const MatrixFactorization& mf, int D) {
    if (!verify(mf).valid) throw std::invalid_argument("coker_dims_oracle: invalid factorization");
    std::vector<long long> out(D + 1, 0);
    std::map<int, std::vector<Monomial>> basis_cache;
    auto basis = [&](int d) -> const std::vector<Monomial>& {
        auto it = basis_cache.find(d);
        if (it == basis_cache.end()) it = basis_cache.emplace(d, degree_basis(mf.ctx, d)).first;
        return it->second;
    };

    // A = S/(f) with f a regular central element, so A_e = S_e / f S_{e-2}.
    // Work in S coordinates: the image of Phi0 inside the quotient has
    // rank([Phi0 columns | f-multiple columns]) - rank(f-multiple columns),
    // and dim A = dim S - rank(f-multiple columns), hence
    //   dim Coker_d = sum_s dim S_{d-m0[s]} - rank([Phi0 cols | f cols]).
    for (int d = 0; d <= D; ++d) {
        int cod_dim = 0;
        std::vector<std::map<std::vector<int>, int>> index_of(mf.r);
        for (int s = 0; s < mf.r; ++s) {
            const auto& bs = basis(d - mf.m0[s]);
            for (int k = 0; k < (int)bs.size(); ++k) index_of[s][bs[k].exps] = cod_dim + k;
            cod_dim += (int)bs.size();
        }
        std::vector<std::vector<GaussianRational>> cols;
        auto add_column = [&](int s_only, const SkewPoly& p) {
            std::vector<GaussianRational> col(cod_dim);
            for (const auto& [m, c] : p.terms()) col[index_of[s_only].at(m.exps)] += c;
            cols.push_back(std::move(col));
        };
        for (int t = 0; t < mf.r; ++t)
            for (const Monomial& b : basis(d - mf.m1[t])) {
                std::vector<GaussianRational> col(cod_dim);
                SkewPoly bp(mf.ctx);
                bp.add_term(b, GaussianRational(1));
                for (int s = 0; s < mf.r; ++s) {
                    if (mf.Phi0[s][t].is_zero()) continue;
                    SkewPoly img = mf.Phi0[s][t] * bp;
                    for (const auto& [m, c] : img.terms()) col[index_of[s].at(m.exps)] += c;
                }
                cols.push_back(std::move(col));
            }
        for (int s = 0; s < mf.r; ++s)
            for (const Monomial& c : basis(d - mf.m0[s] - 2)) {
                SkewPoly cp(mf.ctx);
                cp.add_term(c, GaussianRational(1));
                add_column(s, mf.f * cp);
            }
        out[d] = cod_dim - matrix_rank(cols);
    }
    return out;
}

}  // namespace skewq
