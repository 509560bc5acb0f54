#include "skewq/skewpoly.hpp"

#include <algorithm>
#include <sstream>

namespace skewq {

std::pair<int, Monomial> normalize_word(const SignSystem& ctx, const std::vector<int>& word) {
    for (int v : word)
        if (v < 0 || v >= ctx.n()) throw std::out_of_range("variable index out of range");
    std::vector<int> w = word;
    int sign = 1;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t k = 0; k + 1 < w.size(); ++k) {
            if (w[k] > w[k + 1]) {
                sign *= ctx.eps(w[k], w[k + 1]);
                std::swap(w[k], w[k + 1]);
                moved = true;
            }
        }
    }
    std::vector<int> exps(ctx.n(), 0);
    for (int v : w) ++exps[v];
    return {sign, Monomial(std::move(exps))};
}

LinearSubstitution LinearSubstitution::identity(int n) {
    LinearSubstitution s;
    s.images.assign(n, std::vector<GaussianRational>(n));
    for (int i = 0; i < n; ++i) s.images[i][i] = GaussianRational(1);
    return s;
}

LinearSubstitution LinearSubstitution::sign_flip(int n, const std::vector<int>& flipped) {
    LinearSubstitution s = identity(n);
    for (int i : flipped) {
        if (i < 0 || i >= n) throw std::out_of_range("variable index out of range");
        s.images[i][i] = GaussianRational(-1);
    }
    return s;
}

SkewPoly SkewPoly::constant(const SignSystem& ctx, const GaussianRational& c) {
    SkewPoly p(ctx);
    p.add_term(Monomial::one(ctx.n()), c);
    return p;
}

SkewPoly SkewPoly::variable(const SignSystem& ctx, int i) {
    SkewPoly p(ctx);
    p.add_term(Monomial::var(ctx.n(), i), GaussianRational(1));
    return p;
}

SkewPoly SkewPoly::central_quadric(const SignSystem& ctx) {
    SkewPoly p(ctx);
    for (int i = 0; i < ctx.n(); ++i) {
        Monomial m = Monomial::one(ctx.n());
        m.exps[i] = 2;
        p.add_term(m, GaussianRational(1));
    }
    return p;
}

SkewPoly SkewPoly::linear_form(const SignSystem& ctx, const std::vector<GaussianRational>& coeffs) {
    if ((int)coeffs.size() != ctx.n()) throw std::invalid_argument("coefficient vector length mismatch");
    SkewPoly p(ctx);
    for (int i = 0; i < ctx.n(); ++i) p.add_term(Monomial::var(ctx.n(), i), coeffs[i]);
    return p;
}

std::optional<int> SkewPoly::homogeneous_degree() const {
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

int SkewPoly::max_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void SkewPoly::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    if ((int)m.exps.size() != ctx_.n()) throw std::invalid_argument("monomial arity mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GaussianRational SkewPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
    check_ctx(o);
    SkewPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const {
    check_ctx(o);
    SkewPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

SkewPoly SkewPoly::operator-() const {
    SkewPoly r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SkewPoly SkewPoly::operator*(const SkewPoly& o) const {
    check_ctx(o);
    SkewPoly r(ctx_);
    for (const auto& [ma, ca] : terms_) {
        std::vector<int> wa = ma.word();
        for (const auto& [mb, cb] : o.terms_) {
            std::vector<int> w = wa;
            const std::vector<int> wb = mb.word();
            w.insert(w.end(), wb.begin(), wb.end());
            auto [sign, m] = normalize_word(ctx_, w);
            GaussianRational c = ca * cb;
            if (sign < 0) c = -c;
            r.add_term(m, c);
        }
    }
    return r;
}

SkewPoly SkewPoly::operator*(const GaussianRational& c) const {
    SkewPoly r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

bool SkewPoly::is_central() const {
    for (int i = 0; i < ctx_.n(); ++i) {
        SkewPoly xi = variable(ctx_, i);
        if (xi * *this != *this * xi) return false;
    }
    return true;
}

std::optional<std::pair<int, int>> relation_violation(const SignSystem& ctx,
                                                      const LinearSubstitution& sub) {
    if (sub.n() != ctx.n()) throw std::invalid_argument("substitution arity mismatch");
    std::vector<SkewPoly> img;
    img.reserve(ctx.n());
    for (int i = 0; i < ctx.n(); ++i) img.push_back(SkewPoly::linear_form(ctx, sub.images[i]));
    for (int i = 0; i < ctx.n(); ++i)
        for (int j = i + 1; j < ctx.n(); ++j) {
            SkewPoly lhs = img[i] * img[j];
            SkewPoly rhs = (img[j] * img[i]) * GaussianRational(ctx.eps(i, j));
            if (lhs != rhs) return std::make_pair(i, j);
        }
    return std::nullopt;
}

SkewPoly SkewPoly::substitute(const LinearSubstitution& sub) const {
    if (auto bad = relation_violation(ctx_, sub)) {
        throw RelationViolation("substitution violates relation between x" +
                                std::to_string(bad->first + 1) + " and x" +
                                std::to_string(bad->second + 1));
    }
    std::vector<SkewPoly> img;
    img.reserve(ctx_.n());
    for (int i = 0; i < ctx_.n(); ++i) img.push_back(linear_form(ctx_, sub.images[i]));
    SkewPoly r(ctx_);
    for (const auto& [m, c] : terms_) {
        SkewPoly t = constant(ctx_, c);
        for (int v : m.word()) t = t * img[v];
        r += t;
    }
    return r;
}

SkewPoly SkewPoly::sign_twist(const std::vector<int>& signs) const {
    if ((int)signs.size() != ctx_.n()) throw std::invalid_argument("sign vector length mismatch");
    SkewPoly r(ctx_);
    for (const auto& [m, c] : terms_) {
        int s = 1;
        for (int i = 0; i < ctx_.n(); ++i)
            if (m.exps[i] % 2 != 0 && signs[i] == -1) s = -s;
        r.terms_.emplace(m, s < 0 ? -c : c);
    }
    return r;
}

SkewPoly SkewPoly::lift(const SignSystem& bigger) const {
    if (bigger.n() < ctx_.n()) throw std::invalid_argument("lift target is smaller");
    for (int i = 0; i < ctx_.n(); ++i)
        for (int j = 0; j < ctx_.n(); ++j)
            if (i != j && bigger.eps(i, j) != ctx_.eps(i, j))
                throw std::invalid_argument("lift target does not extend the context");
    SkewPoly r(bigger);
    for (const auto& [m, c] : terms_) {
        std::vector<int> e = m.exps;
        e.resize(bigger.n(), 0);
        r.terms_.emplace(Monomial(std::move(e)), c);
    }
    return r;
}

std::string SkewPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int i = 0; i < (int)m.exps.size(); ++i) {
            if (m.exps[i] == 0) continue;
            os << "*x" << (i + 1);
            if (m.exps[i] > 1) os << "^" << m.exps[i];
        }
    }
    return os.str();
}

}  // namespace skewq
