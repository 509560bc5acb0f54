#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace skewq {

/// The symmetric matrix of commutation signs eps[i][j] in {+1,-1}
/// defining the skew polynomial algebra with relations
/// x_i x_j = eps[i][j] x_j x_i. The diagonal is fixed to +1 and unused.
/// Equivalently a graph on n vertices: edge (i,j) <=> eps[i][j] = +1.
class SignSystem {
public:
    SignSystem() = default;

    /// n variables, all off-diagonal signs equal to `fill` (+1 or -1).
    explicit SignSystem(int n, int fill = -1) : n_(n), eps_(n, std::vector<int>(n, fill)) {
        if (n < 0) throw std::invalid_argument("negative variable count");
        if (fill != 1 && fill != -1) throw std::invalid_argument("sign must be +1 or -1");
        for (int i = 0; i < n; ++i) eps_[i][i] = 1;
    }

    static SignSystem from_matrix(const std::vector<std::vector<int>>& eps) {
        SignSystem s((int)eps.size());
        for (int i = 0; i < s.n_; ++i) {
            if ((int)eps[i].size() != s.n_) throw std::invalid_argument("eps not square");
            for (int j = 0; j < s.n_; ++j) {
                if (i == j) continue;
                if (eps[i][j] != 1 && eps[i][j] != -1)
                    throw std::invalid_argument("eps entries must be +1 or -1");
                if (eps[i][j] != eps[j][i]) throw std::invalid_argument("eps not symmetric");
                s.eps_[i][j] = eps[i][j];
            }
        }
        return s;
    }

    int n() const { return n_; }

    int eps(int i, int j) const {
        check(i);
        check(j);
        return eps_[i][j];
    }

    void set_eps(int i, int j, int v) {
        check(i);
        check(j);
        if (i == j) throw std::invalid_argument("diagonal is fixed");
        if (v != 1 && v != -1) throw std::invalid_argument("sign must be +1 or -1");
        eps_[i][j] = eps_[j][i] = v;
    }

    /// Ore extension by one variable with sign-diagonal automorphism:
    /// the new variable x_n satisfies x_i x_n = signs[i] x_n x_i.
    SignSystem adjoin(const std::vector<int>& signs) const {
        if ((int)signs.size() != n_) throw std::invalid_argument("sign vector length mismatch");
        SignSystem out(n_ + 1);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (i != j) out.eps_[i][j] = eps_[i][j];
        for (int i = 0; i < n_; ++i) {
            if (signs[i] != 1 && signs[i] != -1)
                throw std::invalid_argument("sign must be +1 or -1");
            out.eps_[n_][i] = out.eps_[i][n_] = signs[i];
        }
        return out;
    }

    /// Sign product eps_ij eps_jk eps_ki of a triangle {i,j,k}.
    int triangle_sign(int i, int j, int k) const { return eps(i, j) * eps(j, k) * eps(k, i); }

    friend bool operator==(const SignSystem& a, const SignSystem& b) {
        return a.n_ == b.n_ && a.eps_ == b.eps_;
    }
    friend bool operator!=(const SignSystem& a, const SignSystem& b) { return !(a == b); }

private:
    void check(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("variable index out of range");
    }

    int n_ = 0;
    std::vector<std::vector<int>> eps_;
};

}  // namespace skewq
