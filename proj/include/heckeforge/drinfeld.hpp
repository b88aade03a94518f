#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heckeforge/genword.hpp"
#include "heckeforge/matrix.hpp"
#include "heckeforge/qrep.hpp"

namespace heckeforge {

/// Representation of the Drinfeldian D_{q eta}(sl(n+1)) with h_delta = 0:
/// a U_q package plus the image of the affine generator xi_{delta-theta}.
/// q^{+-h_delta} is the identity throughout.
struct DrinfeldianRep {
    UqRep uq;
    Matrix xi;

    int rank() const { return uq.n; }
    std::size_t dim() const { return uq.dim(); }

    DrinfeldianRep specialize(const Bindings& b) const {
        DrinfeldianRep r;
        r.uq.n = uq.n;
        r.uq.legs = uq.legs;
        for (const auto& m : uq.qe_pos) r.uq.qe_pos.push_back(m.specialize(b));
        for (const auto& m : uq.qe_neg) r.uq.qe_neg.push_back(m.specialize(b));
        for (const auto& m : uq.e_pos) r.uq.e_pos.push_back(m.specialize(b));
        for (const auto& m : uq.e_neg) r.uq.e_neg.push_back(m.specialize(b));
        r.xi = xi.specialize(b);
        return r;
    }
};

/// The distinguished weight -theta element of Eq. q^{e_11+e_{n+1,n+1}} e_{n+1,1}
/// whose substitution for xi solves the defining relations.
inline GenWord etheta_tilde(int n) {
    std::vector<int> c(static_cast<std::size_t>(n + 1), 0);
    c.front() = 1;
    c.back() = 1;
    return GenWord::symbol(n, GenSymbol::cartan_exp(std::move(c))) *
           GenWord::symbol(n, GenSymbol::root(n + 1, 1));
}

/// Evaluation representation: the natural U_q representation extended by
/// xi -> u_value * q^{e_11+e_{n+1,n+1}} e_{n+1,1}. Defined for n >= 2.
inline DrinfeldianRep eval_rep(int n, const RatFunc& u_value) {
    if (n < 2) throw RankTooSmall("the Drinfeldian evaluation representation needs n >= 2");
    DrinfeldianRep rep;
    rep.uq = natural_rep(n);
    rep.xi = eval_genword(etheta_tilde(n), rep.uq).scaled(u_value);
    return rep;
}

/// Evaluation representation at the symbolic spectral parameter u.
inline DrinfeldianRep eval_rep(int n) { return eval_rep(n, RatFunc::variable(Var::u)); }

/// One summand of an l-fold coproduct of xi: a pure tensor of generator
/// words with at most one leg marked as xi. The marked leg's word is the
/// identity; the xi itself is substituted at evaluation time (an evaluation
/// matrix, or the Hecke element u_i inside the duality functor).
struct XiSummand {
    std::vector<GenWord> legs;
    std::optional<int> xi_slot;  // 1-based
    RatFunc coeff;
};

struct XiExpansion {
    int n = 0;
    int l = 0;
    std::vector<XiSummand> summands;

    XiExpansion specialize(const Bindings& b) const {
        XiExpansion r;
        r.n = n;
        r.l = l;
        for (const auto& s : summands) {
            RatFunc c = s.coeff.specialize(b);
            if (c.is_zero()) continue;
            r.summands.push_back({s.legs, s.xi_slot, std::move(c)});
        }
        return r;
    }
};

namespace detail {

/// The two-fold coproduct of xi with h_delta = 0:
///   Delta(xi) = xi x 1 + q^{e_11 - e_{n+1,n+1}} x xi
///     + eta ( e_{n+1,1} q^{e_{n+1,n+1}} x [e_11]
///           + [e_{n+1,n+1}] x e_{n+1,1} q^{e_{n+1,n+1}}
///           + sum_{i=2..n} e_{n+1,i} q^{e_{n+1,n+1}} x e_{i1} q^{e_ii}
///           ) (q^{e_11} x q^{e_11})
inline std::vector<XiSummand> xi_delta2(int n) {
    auto unit_vec = [n](int i, int v) {
        std::vector<int> c(static_cast<std::size_t>(n + 1), 0);
        c[static_cast<std::size_t>(i - 1)] = v;
        return c;
    };
    const GenWord one = GenWord::one(n);
    const GenWord qe11 = GenWord::cartan_unit(n, 1, 1);
    const GenWord qenn = GenWord::cartan_unit(n, n + 1, 1);

    std::vector<XiSummand> out;
    out.push_back({{one, one}, 1, rf_one()});
    {
        std::vector<int> c(static_cast<std::size_t>(n + 1), 0);
        c.front() = 1;
        c.back() = -1;
        out.push_back({{GenWord::symbol(n, GenSymbol::cartan_exp(std::move(c))), one}, 2, rf_one()});
    }
    const RatFunc eta = rf_eta();
    {
        GenWord left = GenWord::symbol(n, GenSymbol::root(n + 1, 1)) * qenn * qe11;
        GenWord right = GenWord::symbol(n, GenSymbol::cartan_bracket(unit_vec(1, 1), 0)) * qe11;
        out.push_back({{std::move(left), std::move(right)}, std::nullopt, eta});
    }
    {
        GenWord left = GenWord::symbol(n, GenSymbol::cartan_bracket(unit_vec(n + 1, 1), 0)) * qe11;
        GenWord right = GenWord::symbol(n, GenSymbol::root(n + 1, 1)) * qenn * qe11;
        out.push_back({{std::move(left), std::move(right)}, std::nullopt, eta});
    }
    for (int i = 2; i <= n; ++i) {
        GenWord left = GenWord::symbol(n, GenSymbol::root(n + 1, i)) * qenn * qe11;
        GenWord right = GenWord::symbol(n, GenSymbol::root(i, 1)) *
                        GenWord::cartan_unit(n, i, 1) * qe11;
        out.push_back({{std::move(left), std::move(right)}, std::nullopt, eta});
    }
    return out;
}

}  // namespace detail

/// l-fold coproduct of xi, iterated from the two-fold formula. left = true
/// expands the first tensor leg at each step (Delta x id^{l-2}) o ...;
/// left = false expands the last. Both give equal matrix images
/// (coassociativity), which the test suite verifies.
inline XiExpansion xi_coproduct_nested(int n, int l, bool left) {
    if (n < 2) throw RankTooSmall("xi coproduct needs n >= 2");
    if (l < 1) throw IndexOutOfRange("xi coproduct needs l >= 1");
    XiExpansion exp;
    exp.n = n;
    exp.l = 1;
    exp.summands.push_back({{GenWord::one(n)}, 1, rf_one()});
    const std::vector<XiSummand> delta2 = detail::xi_delta2(n);

    while (exp.l < l) {
        XiExpansion next;
        next.n = n;
        next.l = exp.l + 1;
        const std::size_t split =
            left ? 0 : static_cast<std::size_t>(exp.l - 1);  // leg being expanded
        for (const auto& s : exp.summands) {
            if (s.xi_slot && static_cast<std::size_t>(*s.xi_slot - 1) == split) {
                // the expanded leg is the xi marker: substitute the 2-fold formula
                for (const auto& d : delta2) {
                    XiSummand t;
                    t.coeff = s.coeff * d.coeff;
                    if (t.coeff.is_zero()) continue;
                    t.legs.reserve(s.legs.size() + 1);
                    for (std::size_t k = 0; k < split; ++k) t.legs.push_back(s.legs[k]);
                    t.legs.push_back(d.legs[0]);
                    t.legs.push_back(d.legs[1]);
                    for (std::size_t k = split + 1; k < s.legs.size(); ++k)
                        t.legs.push_back(s.legs[k]);
                    if (d.xi_slot) t.xi_slot = static_cast<int>(split) + *d.xi_slot;
                    next.summands.push_back(std::move(t));
                }
            } else {
                // ordinary U_q leg: apply the symbolic two-fold coproduct
                for (const auto& ct : coproduct2(s.legs[split])) {
                    XiSummand t;
                    t.coeff = s.coeff;
                    t.legs.reserve(s.legs.size() + 1);
                    for (std::size_t k = 0; k < split; ++k) t.legs.push_back(s.legs[k]);
                    t.legs.push_back(ct.left);
                    t.legs.push_back(ct.right);
                    for (std::size_t k = split + 1; k < s.legs.size(); ++k)
                        t.legs.push_back(s.legs[k]);
                    if (s.xi_slot) {
                        const int slot = *s.xi_slot;
                        t.xi_slot = slot > static_cast<int>(split) + 1 ? slot + 1 : slot;
                    }
                    next.summands.push_back(std::move(t));
                }
            }
        }
        exp = std::move(next);
    }
    return exp;
}

/// Left-nested l-fold coproduct of xi (the fixed convention).
inline XiExpansion xi_coproduct(int n, int l) { return xi_coproduct_nested(n, l, true); }

/// Evaluates an expansion on V^{tensor l}: every xi leg becomes the
/// evaluation image at that slot's spectral parameter, every other leg its
/// natural-representation image.
inline Matrix xi_expansion_matrix(const XiExpansion& exp, const std::vector<RatFunc>& u_params) {
    if (u_params.size() != static_cast<std::size_t>(exp.l))
        throw RankMismatch("one spectral parameter per tensor leg is required");
    const UqRep nat = natural_rep(exp.n);
    const Matrix xi_base = eval_genword(etheta_tilde(exp.n), nat);
    const std::size_t d = nat.dim();
    std::size_t total_dim = 1;
    for (int k = 0; k < exp.l; ++k) total_dim *= d;
    Matrix total(total_dim, total_dim);
    for (const auto& s : exp.summands) {
        Matrix acc = Matrix::identity(1);
        for (std::size_t k = 0; k < s.legs.size(); ++k) {
            if (s.xi_slot && static_cast<std::size_t>(*s.xi_slot - 1) == k)
                acc = kron(acc, xi_base.scaled(u_params[k]));
            else
                acc = kron(acc, eval_genword(s.legs[k], nat));
        }
        total = total + acc.scaled(s.coeff);
    }
    return total;
}

/// Antipode of xi with h_delta = 0:
///   S(xi) = -q^{-e_11+e_{n+1,n+1}} xi
///         + eta [e_11+e_{n+1,n+1}+1] q^{-e_11+e_{n+1,n+1}-1} e_{n+1,1}
///         + eta sum_{k=1..n} q^{-k} (q-q^{-1})^{k-1}
///               sum_{n >= i_k > ... > i_1 >= 2} e_{n+1,i_k} ... e_{i_1,1} q^{-2 e_11}
inline GenWord xi_antipode(int n) {
    if (n < 2) throw RankTooSmall("xi antipode needs n >= 2");
    auto cvec = [n](int first, int last) {
        std::vector<int> c(static_cast<std::size_t>(n + 1), 0);
        c.front() = first;
        c.back() = last;
        return c;
    };
    GenWord out =
        (GenWord::symbol(n, GenSymbol::cartan_exp(cvec(-1, 1))) *
         GenWord::symbol(n, GenSymbol::xi()))
            .scaled(-rf_one());
    out = out + (GenWord::symbol(n, GenSymbol::cartan_bracket(cvec(1, 1), 1)) *
                 GenWord::symbol(n, GenSymbol::cartan_exp(cvec(-1, 1))) *
                 GenWord::symbol(n, GenSymbol::root(n + 1, 1)))
                    .scaled(rf_eta() * RatFunc::q_power(-1));

    // chains n >= i_k > ... > i_1 >= 2 of length k
    std::vector<int> middle;
    for (int i = n; i >= 2; --i) middle.push_back(i);
    std::vector<std::vector<int>> chains;  // decreasing sequences
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!cur.empty()) chains.push_back(cur);
        for (std::size_t t = start; t < middle.size(); ++t) {
            cur.push_back(middle[t]);
            self(self, t + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);

    std::vector<int> qm2e11(static_cast<std::size_t>(n + 1), 0);
    qm2e11.front() = -2;
    for (const auto& chain : chains) {
        const int k = static_cast<int>(chain.size());
        RatFunc coeff = rf_eta() * RatFunc::q_power(-k);
        for (int t = 1; t < k; ++t) coeff *= rf_q_minus_qinv();
        GenWord w = GenWord::symbol(n, GenSymbol::root(n + 1, chain.front()));
        for (int t = 0; t + 1 < k; ++t)
            w = w * GenWord::symbol(n, GenSymbol::root(chain[static_cast<std::size_t>(t)],
                                                       chain[static_cast<std::size_t>(t) + 1]));
        w = w * GenWord::symbol(n, GenSymbol::root(chain.back(), 1));
        w = w * GenWord::symbol(n, GenSymbol::cartan_exp(qm2e11));
        out = out + w.scaled(coeff);
    }
    return out;
}

}  // namespace heckeforge
