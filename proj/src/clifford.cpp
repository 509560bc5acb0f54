#include "skewq/clifford.hpp"

#include <stdexcept>

namespace skewq {

CliffordPresentation CliffordPresentation::build(const SignSystem& eps, int base) {
    const int n = eps.n();
    if (n < 1) throw std::invalid_argument("need at least one variable");
    if (base < 1 || base > n) throw std::out_of_range("base vertex out of range");
    CliffordPresentation p;
    p.m = n - 1;
    for (int v = 1; v <= n; ++v)
        if (v != base) p.vertices.push_back(v);
    p.comm.assign(p.m, std::vector<int>(p.m, 1));
    for (int i = 0; i < p.m; ++i)
        for (int j = 0; j < p.m; ++j) {
            if (i == j) continue;
            int vi = p.vertices[i] - 1, vj = p.vertices[j] - 1, b = base - 1;
            p.comm[i][j] = eps.eps(b, vi) * eps.eps(vi, vj) * eps.eps(vj, b);
        }
    return p;
}

namespace {

int f2_rank(std::vector<std::uint32_t> rows, int m) {
    int rank = 0;
    for (int col = 0; col < m; ++col) {
        int pivot = -1;
        for (int i = rank; i < (int)rows.size(); ++i)
            if ((rows[i] >> col) & 1u) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int i = 0; i < (int)rows.size(); ++i)
            if (i != rank && ((rows[i] >> col) & 1u)) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank;
}

}  // namespace

CliffordStructure structure(const SignSystem& eps, int base) {
    CliffordPresentation p = CliffordPresentation::build(eps, base);
    CliffordStructure s;
    s.m = p.m;
    s.B.assign(p.m, 0);
    for (int i = 0; i < p.m; ++i)
        for (int j = 0; j < p.m; ++j)
            if (i != j && p.comm[i][j] == 1) s.B[i] |= 1u << j;
    s.rankB = f2_rank(s.B, p.m);
    if (s.rankB % 2 != 0) throw std::logic_error("alternating form with odd rank");
    s.components = 1ll << (s.m - s.rankB);
    s.block = 1ll << (s.rankB / 2);
    return s;
}

CliffordStructure structure(const SignSystem& eps) { return structure(eps, eps.n()); }

long long descriptor(const SignSystem& eps) { return structure(eps).components; }

long long min_module_dim(const SignSystem& eps) { return structure(eps).block; }

namespace {

// Sign picked up when t_i enters the ascending word T from the right:
// it passes every t_j with j > i, each swap contributing -comm[i][j].
int sign_from_right(const CliffordPresentation& p, std::uint32_t T, int i) {
    int s = 1;
    for (int j = i + 1; j < p.m; ++j)
        if ((T >> j) & 1u) s *= -p.comm[i][j];
    return s;
}

int sign_from_left(const CliffordPresentation& p, std::uint32_t T, int i) {
    int s = 1;
    for (int j = 0; j < i; ++j)
        if ((T >> j) & 1u) s *= -p.comm[i][j];
    return s;
}

}  // namespace

CenterOracleReport center_oracle(const CliffordPresentation& p) {
    if (p.m > 12) throw std::invalid_argument("center oracle capped at 12 generators");
    const std::uint32_t dim = 1u << p.m;
    CenterOracleReport rep;

    // z = sum c_T e_T commutes with t_i iff each coefficient satisfies
    // c_T sign_from_right(T,i) = c_T sign_from_left(T,i): in the word
    // basis the system z t_i = t_i z decouples, so the center dimension
    // is the number of words commuting with every generator.
    for (std::uint32_t T = 0; T < dim; ++T) {
        bool central = true;
        for (int i = 0; i < p.m && central; ++i)
            central = sign_from_right(p, T, i) == sign_from_left(p, T, i);
        if (central) ++rep.center_dim;
    }

    // Trace form of the regular representation: tr(e_T e_U) vanishes
    // unless the product lands on the empty word, i.e. U = T; the
    // diagonal entries are +/- 2^m, so nondegeneracy = all nonzero.
    rep.radical_zero = true;
    for (std::uint32_t T = 0; T < dim && rep.radical_zero; ++T) {
        std::uint32_t word = T;
        int sign = 1;
        for (int i = 0; i < p.m; ++i)
            if ((T >> i) & 1u) {
                sign *= sign_from_right(p, word, i);
                word ^= 1u << i;
            }
        long long trace = (word == 0) ? sign * (1ll << p.m) : 0;
        if (trace == 0) rep.radical_zero = false;
    }
    return rep;
}

long long center_dim_oracle(const CliffordPresentation& p) { return center_oracle(p).center_dim; }

}  // namespace skewq
