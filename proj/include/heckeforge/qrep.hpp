#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heckeforge/errors.hpp"
#include "heckeforge/genword.hpp"
#include "heckeforge/matrix.hpp"
#include "heckeforge/rootdata.hpp"

namespace heckeforge {

/// Matrix package of a weight representation of U_q(sl(n+1)): images of the
/// Cartan exponentials q^{+-e_ii} (i = 1..n+1) and the Chevalley elements
/// e_{+-alpha_i} (i = 1..n). legs records the tensor-power structure; the
/// dimension need not be (n+1)^legs for quotient representations.
struct UqRep {
    int n = 0;
    int legs = 1;
    std::vector<Matrix> qe_pos;  // q^{e_ii}
    std::vector<Matrix> qe_neg;  // q^{-e_ii}
    std::vector<Matrix> e_pos;   // e_{i,i+1}
    std::vector<Matrix> e_neg;   // e_{i+1,i}

    std::size_t dim() const { return qe_pos.empty() ? 0 : qe_pos.front().rows(); }
};

namespace detail {

/// Reads a diagonal entry q^m off a Cartan image; the entry must be a pure
/// power of q.
inline int q_exponent(const RatFunc& v) {
    if (v.num().term_count() != 1 || v.den().term_count() != 1)
        throw std::invalid_argument("cartan entry is not a q power: " + v.to_string());
    const auto& nt = *v.num().terms().begin();
    const auto& dt = *v.den().terms().begin();
    if (nt.second != dt.second)
        throw std::invalid_argument("cartan entry is not a q power: " + v.to_string());
    const Exponents e = nt.first - dt.first;
    if (e.eta != 0 || e.u != 0 || e.a != 0)
        throw std::invalid_argument("cartan entry involves non-q variables: " + v.to_string());
    return e.q;
}

}  // namespace detail

/// Integer weight of every basis vector, read off the diagonal Cartan
/// images: weights[b][i] with q^{e_ii} v_b = q^{weights[b][i]} v_b.
inline std::vector<std::vector<int>> basis_weights(const UqRep& rep) {
    const std::size_t d = rep.dim();
    std::vector<std::vector<int>> w(d, std::vector<int>(rep.qe_pos.size(), 0));
    for (std::size_t i = 0; i < rep.qe_pos.size(); ++i) {
        const Matrix& m = rep.qe_pos[i];
        if (!m.is_diagonal())
            throw std::invalid_argument("cartan image is not diagonal");
        for (std::size_t b = 0; b < d; ++b) w[b][i] = detail::q_exponent(m.at(b, b));
    }
    return w;
}

/// The natural (n+1)-dimensional representation: e_{ij} v_k = delta_jk v_i,
/// q^{+-e_ii} v_k = q^{+-delta_ik} v_k.
inline UqRep natural_rep(int n) {
    if (n < 1) throw RankTooSmall("natural representation needs n >= 1");
    const std::size_t d = static_cast<std::size_t>(n + 1);
    UqRep rep;
    rep.n = n;
    rep.legs = 1;
    for (int i = 1; i <= n + 1; ++i) {
        Matrix p = Matrix::identity(d);
        Matrix m = Matrix::identity(d);
        p.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)) =
            RatFunc::q_power(1);
        m.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)) =
            RatFunc::q_power(-1);
        rep.qe_pos.push_back(std::move(p));
        rep.qe_neg.push_back(std::move(m));
    }
    for (int i = 1; i <= n; ++i) {
        Matrix ep(d, d);
        Matrix en(d, d);
        ep.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i)) = rf_one();
        en.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1)) = rf_one();
        rep.e_pos.push_back(std::move(ep));
        rep.e_neg.push_back(std::move(en));
    }
    return rep;
}

/// Representation of U_q on V^{tensor l} through the iterated coproduct:
/// Cartan exponentials are group-like; the Chevalley legs follow
///   Delta^{(l)}(e_a)  = sum_k q^{-h_a} x ... x q^{-h_a} x e_a x 1 x ... x 1,
///   Delta^{(l)}(e_-a) = sum_k 1 x ... x 1 x e_-a x q^{h_a} x ... x q^{h_a}.
inline UqRep tensor_power_rep(int n, int l) {
    if (l < 1) throw IndexOutOfRange("tensor power needs l >= 1");
    const UqRep nat = natural_rep(n);
    if (l == 1) return nat;
    UqRep rep;
    rep.n = n;
    rep.legs = l;
    auto kron_power = [&](const Matrix& m) {
        Matrix acc = m;
        for (int k = 1; k < l; ++k) acc = kron(acc, m);
        return acc;
    };
    for (int i = 0; i <= n; ++i) {
        rep.qe_pos.push_back(kron_power(nat.qe_pos[static_cast<std::size_t>(i)]));
        rep.qe_neg.push_back(kron_power(nat.qe_neg[static_cast<std::size_t>(i)]));
    }
    const std::size_t d1 = nat.dim();
    const Matrix id1 = Matrix::identity(d1);
    for (int i = 1; i <= n; ++i) {
        // q^{+-h_{alpha_i}} on one leg
        Matrix qh_pos = nat.qe_pos[static_cast<std::size_t>(i - 1)] *
                        nat.qe_neg[static_cast<std::size_t>(i)];
        Matrix qh_neg = nat.qe_neg[static_cast<std::size_t>(i - 1)] *
                        nat.qe_pos[static_cast<std::size_t>(i)];
        Matrix ep, en;
        bool first = true;
        for (int k = 1; k <= l; ++k) {
            Matrix term_p = Matrix::identity(1);
            Matrix term_n = Matrix::identity(1);
            for (int leg = 1; leg <= l; ++leg) {
                const Matrix* fp;
                const Matrix* fn;
                if (leg < k) {
                    fp = &qh_neg;
                    fn = &id1;
                } else if (leg == k) {
                    fp = &nat.e_pos[static_cast<std::size_t>(i - 1)];
                    fn = &nat.e_neg[static_cast<std::size_t>(i - 1)];
                } else {
                    fp = &id1;
                    fn = &qh_pos;
                }
                term_p = kron(term_p, *fp);
                term_n = kron(term_n, *fn);
            }
            if (first) {
                ep = std::move(term_p);
                en = std::move(term_n);
                first = false;
            } else {
                ep = ep + term_p;
                en = en + term_n;
            }
        }
        rep.e_pos.push_back(std::move(ep));
        rep.e_neg.push_back(std::move(en));
    }
    return rep;
}

/// Image of a Cartan exponential word q^{sum c_i e_ii} in a representation.
inline Matrix cartan_exp_matrix(const UqRep& rep, const std::vector<int>& cartan) {
    Matrix acc = Matrix::identity(rep.dim());
    for (std::size_t i = 0; i < cartan.size(); ++i) {
        const int c = cartan[i];
        if (c == 0) continue;
        const Matrix& base = c > 0 ? rep.qe_pos[i] : rep.qe_neg[i];
        for (int k = 0; k < std::abs(c); ++k) acc = acc * base;
    }
    return acc;
}

/// Evaluates a generator word. Composite root vectors are built by the
/// recursive q-commutators at the matrix level; Cartan brackets act
/// entrywise as q-numbers of the basis weights.
inline Matrix eval_genword(const GenWord& x, const UqRep& rep,
                           const std::optional<Matrix>& xi = std::nullopt) {
    const std::size_t d = rep.dim();
    const auto weights = basis_weights(rep);
    RootData rd(rep.n);

    auto eps_minus = [&rd](int i, int k) {
        std::vector<int> w(static_cast<std::size_t>(rd.dim()), 0);
        w[static_cast<std::size_t>(i - 1)] += 1;
        w[static_cast<std::size_t>(k - 1)] -= 1;
        return w;
    };
    // e_{ij} = [e_{ik}, e_{kj}]_{q^{-1}} (i<j) resp. []_q (i>j), k = min+1
    auto root_matrix = [&](auto&& self, int i, int j) -> Matrix {
        if (std::abs(i - j) == 1) {
            return j == i + 1 ? rep.e_pos[static_cast<std::size_t>(i - 1)]
                              : rep.e_neg[static_cast<std::size_t>(j - 1)];
        }
        const int k = std::min(i, j) + 1;
        const Matrix a = self(self, i, k);
        const Matrix b = self(self, k, j);
        const int sign = i < j ? -1 : +1;
        const int power = sign * RootData::pairing(eps_minus(i, k), eps_minus(k, j));
        return a * b - (b * a).scaled(RatFunc::q_power(power));
    };

    Matrix out(d, d);
    for (const auto& t : x.terms()) {
        Matrix acc = Matrix::scalar(d, t.coeff);
        for (const auto& s : t.syms) {
            switch (s.kind) {
                case GenSymbol::Kind::CartanExp: acc = acc * cartan_exp_matrix(rep, s.cartan); break;
                case GenSymbol::Kind::CartanBracket: {
                    Matrix b(d, d);
                    for (std::size_t v = 0; v < d; ++v) {
                        int m = s.shift;
                        for (std::size_t i = 0; i < s.cartan.size(); ++i)
                            m += s.cartan[i] * weights[v][i];
                        b.at(v, v) = qnum_rf(m);
                    }
                    acc = acc * b;
                    break;
                }
                case GenSymbol::Kind::Root: acc = acc * root_matrix(root_matrix, s.i, s.j); break;
                case GenSymbol::Kind::Xi:
                    if (!xi) throw XiNotAllowed("no xi image available in this representation");
                    acc = acc * (*xi);
                    break;
            }
        }
        out = out + acc;
    }
    return out;
}

/// Delta^{(l)} image of an xi-free word as a matrix on V^{tensor l};
/// at l = 1 this is the natural-representation image.
inline Matrix coproduct_power(const GenWord& x, int l) {
    if (x.contains_xi()) throw XiNotAllowed("coproduct_power does not accept xi");
    return eval_genword(x, tensor_power_rep(x.rank(), l));
}

/// The braiding T on V x V: T(v_r x v_s) = q v_r x v_s if r = s,
/// v_s x v_r if r < s, v_s x v_r + (q - q^{-1}) v_r x v_s if r > s.
inline Matrix t_operator(int n) {
    if (n < 1) throw RankTooSmall("t_operator needs n >= 1");
    const std::size_t d = static_cast<std::size_t>(n + 1);
    Matrix t(d * d, d * d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t s = 0; s < d; ++s) {
            const std::size_t col = r * d + s;
            if (r == s) {
                t.at(col, col) = RatFunc::q_power(1);
            } else {
                t.at(s * d + r, col) = rf_one();
                if (r > s) t.at(col, col) = rf_q_minus_qinv();
            }
        }
    return t;
}

/// sigma_i on V^{tensor l}: T on legs (i, i+1), identity elsewhere.
inline Matrix sigma_on_tensor(int n, int l, int i) {
    if (i < 1 || i > l - 1) throw PositionOutOfRange("tensor leg position out of range");
    const std::size_t d = static_cast<std::size_t>(n + 1);
    Matrix acc = Matrix::identity(1);
    int leg = 1;
    while (leg <= l) {
        if (leg == i) {
            acc = kron(acc, t_operator(n));
            leg += 2;
        } else {
            acc = kron(acc, Matrix::identity(d));
            leg += 1;
        }
    }
    return acc;
}

}  // namespace heckeforge
