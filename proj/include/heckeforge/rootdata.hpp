#pragma once

#include <vector>

#include "heckeforge/errors.hpp"

namespace heckeforge {

/// A_n root data in the epsilon basis: weights live in Z^{n+1} with the
/// pairing (eps_i, eps_j) = delta_ij, simple roots alpha_i = eps_i - eps_{i+1},
/// maximal root theta = eps_1 - eps_{n+1} = alpha_1 + ... + alpha_n. The
/// central element N = sum e_ii is fixed to zero in the algebra; weight
/// vectors still carry n+1 integer entries.
struct RootData {
    int n;

    explicit RootData(int rank) : n(rank) {
        if (rank < 1) throw RankTooSmall("root data needs rank >= 1");
    }

    int dim() const { return n + 1; }

    std::vector<int> eps(int i) const {
        check_index(i, 1, n + 1);
        std::vector<int> w(static_cast<std::size_t>(n + 1), 0);
        w[static_cast<std::size_t>(i - 1)] = 1;
        return w;
    }

    std::vector<int> alpha(int i) const {
        check_index(i, 1, n);
        std::vector<int> w(static_cast<std::size_t>(n + 1), 0);
        w[static_cast<std::size_t>(i - 1)] = 1;
        w[static_cast<std::size_t>(i)] = -1;
        return w;
    }

    std::vector<int> theta() const {
        std::vector<int> w(static_cast<std::size_t>(n + 1), 0);
        w.front() = 1;
        w.back() = -1;
        return w;
    }

    /// h_{alpha_i} = e_ii - e_{i+1,i+1} as a Cartan coefficient vector.
    std::vector<int> h_alpha(int i) const { return alpha(i); }

    static int pairing(const std::vector<int>& x, const std::vector<int>& y) {
        if (x.size() != y.size()) throw RankMismatch("weight vectors of different rank");
        int s = 0;
        for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
        return s;
    }

    int alpha_pairing(int i, int j) const { return pairing(alpha(i), alpha(j)); }

    /// Positive roots eps_i - eps_j, i < j, in the normal order used for
    /// composite root vectors: grouped by the larger index j.
    std::vector<std::pair<int, int>> positive_roots() const {
        std::vector<std::pair<int, int>> out;
        for (int j = 2; j <= n + 1; ++j)
            for (int i = 1; i < j; ++i) out.emplace_back(i, j);
        return out;
    }

  private:
    static void check_index(int i, int lo, int hi) {
        if (i < lo || i > hi) throw IndexOutOfRange("root index out of range");
    }
};

}  // namespace heckeforge
