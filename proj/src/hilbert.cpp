#include "skewq/hilbert.hpp"

#include <stdexcept>

namespace skewq {

Series series_mul(const Series& a, const Series& b, int D) {
    Series r(D + 1, 0);
    for (int i = 0; i <= D && i < (int)a.size(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= D && j < (int)b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Series series_inverse(const Series& a, int D) {
    if (a.empty() || (a[0] != 1 && a[0] != -1))
        throw std::invalid_argument("series unit term must be +/-1");
    Series r(D + 1, 0);
    r[0] = a[0];  // 1/(+/-1)
    for (int d = 1; d <= D; ++d) {
        long long s = 0;
        for (int k = 1; k <= d; ++k)
            if (k < (int)a.size()) s += a[k] * r[d - k];
        r[d] = -s * a[0];
    }
    return r;
}

Series series_inv_one_minus_t_pow(int n, int D) {
    Series one_minus_t = {1, -1};
    Series pw = {1};
    for (int k = 0; k < n; ++k) pw = series_mul(pw, one_minus_t, D);
    return series_inverse(pw, D);
}

Series series_one_plus_t_pow(int n, int D) {
    Series one_plus_t = {1, 1};
    Series pw = {1};
    for (int k = 0; k < n; ++k) pw = series_mul(pw, one_plus_t, D);
    pw.resize(D + 1, 0);
    return pw;
}

Series series_negate_t(const Series& a) {
    Series r = a;
    for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return r;
}

Series hilbert_S(int n, int D) { return series_inv_one_minus_t_pow(n, D); }

Series hilbert_A(int n, int D) {
    Series one_minus_t2 = {1, 0, -1};
    return series_mul(hilbert_S(n, D), one_minus_t2, D);
}

Series hilbert_A_shriek(int n, int D) {
    // Koszul identity H_A(t) H_{A^!}(-t) = 1, i.e. H_{A^!}(t) = 1/H_A(-t).
    return series_inverse(series_negate_t(hilbert_A(n, D)), D);
}

long long count_monomials(int n, int d) {
    // dim (S_eps)_d: normal-form monomials of total degree d, counted by
    // recursion over the exponent of the last variable.
    if (n == 0) return d == 0 ? 1 : 0;
    if (n == 1) return 1;
    long long total = 0;
    for (int e = 0; e <= d; ++e) total += count_monomials(n - 1, d - e);
    return total;
}

HilbertCheckReport hilbert_checks(int n, int D) {
    if (n < 1 || D < 0) throw std::invalid_argument("hilbert_checks: bad arguments");
    HilbertCheckReport rep;
    rep.n = n;
    rep.max_degree = D;
    rep.h_S = hilbert_S(n, D);
    rep.h_A = hilbert_A(n, D);
    rep.h_A_shriek = hilbert_A_shriek(n, D);

    auto fail = [&rep](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(msg);
    };

    // H_{A^!} = (1+t)^n / (1-t^2) = (1+t)^{n-1} / (1-t).
    Series expect_shriek =
        series_mul(series_one_plus_t_pow(n, D), series_inverse({1, 0, -1}, D), D);
    for (int d = 0; d <= D; ++d)
        if (rep.h_A_shriek[d] != expect_shriek[d])
            fail("H_{A^!}[" + std::to_string(d) + "] = " + std::to_string(rep.h_A_shriek[d]) +
                 " != " + std::to_string(expect_shriek[d]));

    // H_{(A^dagger)^!} computed via the Koszul route for the (n+1)-variable
    // extension must match the closed form (1+t)^n / (1-t).
    rep.h_A_dagger_shriek = hilbert_A_shriek(n + 1, D);
    Series expect_dagger =
        series_mul(series_one_plus_t_pow(n, D), series_inverse({1, -1}, D), D);
    for (int d = 0; d <= D; ++d)
        if (rep.h_A_dagger_shriek[d] != expect_dagger[d])
            fail("H_{(A+)^!}[" + std::to_string(d) + "] = " +
                 std::to_string(rep.h_A_dagger_shriek[d]) + " != " +
                 std::to_string(expect_dagger[d]));

    // dim (S_eps)_d by direct monomial count.
    for (int d = 0; d <= D; ++d)
        if (count_monomials(n, d) != rep.h_S[d])
            fail("monomial count at degree " + std::to_string(d) + " = " +
                 std::to_string(count_monomials(n, d)) + " != " + std::to_string(rep.h_S[d]));

    return rep;
}

}  // namespace skewq
