#pragma once

#include <random>
#include <string>
#include <vector>

#include "heckeforge/drinfeld.hpp"
#include "heckeforge/heckemodule.hpp"
#include "heckeforge/matrix.hpp"
#include "heckeforge/qrep.hpp"

namespace heckeforge {

/// Exact quotient of the ambient space M x V^{tensor l} by the balanced
/// tensor relations R = span{ (m sigma_i) x v - m x (sigma_i v) }. Coset
/// representatives are the ambient coordinates not hit by a pivot.
struct QuotientSpace {
    std::size_t ambient_dim = 0;
    std::size_t dim = 0;
    Matrix relation_basis;                    // echelon rows spanning R
    std::vector<std::size_t> pivot_columns;   // pivots of relation_basis
    std::vector<std::size_t> coset_columns;   // ambient coords representing cosets
    Matrix projection;                        // dim x ambient
    Matrix section;                           // ambient x dim

    Matrix push(const Matrix& ambient_op) const { return projection * ambient_op * section; }

    /// Exact membership test for R-invariance: A r must reduce to zero
    /// against the echelon basis for every relation row r.
    bool preserves_relations(const Matrix& ambient_op) const {
        for (std::size_t k = 0; k < relation_basis.rows(); ++k) {
            // image of the k-th relation vector
            std::vector<RatFunc> v(ambient_dim, rf_zero());
            for (std::size_t c = 0; c < ambient_dim; ++c) {
                const RatFunc& rc = relation_basis.at(k, c);
                if (rc.is_zero()) continue;
                for (std::size_t r = 0; r < ambient_dim; ++r) {
                    const RatFunc& arc = ambient_op.at(r, c);
                    if (!arc.is_zero()) v[r] += arc * rc;
                }
            }
            // reduce against the echelon rows
            for (std::size_t t = 0; t < relation_basis.rows(); ++t) {
                const std::size_t p = pivot_columns[t];
                if (v[p].is_zero()) continue;
                const RatFunc f = v[p];
                for (std::size_t c = 0; c < ambient_dim; ++c) {
                    const RatFunc& rc = relation_basis.at(t, c);
                    if (!rc.is_zero()) v[c] -= f * rc;
                }
            }
            for (const auto& x : v)
                if (!x.is_zero()) return false;
        }
        return true;
    }
};

struct FunctorResult {
    QuotientSpace quotient;
    DrinfeldianRep rep;
    bool level_warning = false;  // set when l > n (outside the equivalence range)
};

namespace detail {

/// Spanning rows of the balanced-tensor relation subspace.
inline Matrix relation_rows(const HeckeModule& mod, int n) {
    const int l = mod.l;
    const std::size_t dv = [&] {
        std::size_t d = 1;
        for (int k = 0; k < l; ++k) d *= static_cast<std::size_t>(n + 1);
        return d;
    }();
    const std::size_t ambient = mod.dim * dv;
    Matrix rows((static_cast<std::size_t>(l) - 1) * mod.dim * dv, ambient);
    std::size_t row = 0;
    for (int i = 1; i < l; ++i) {
        const Matrix& rs = mod.sigma_mat(i);
        const Matrix tv = sigma_on_tensor(n, l, i);
        for (std::size_t b = 0; b < mod.dim; ++b)
            for (std::size_t J = 0; J < dv; ++J) {
                // (m_b sigma_i) x v_J
                for (std::size_t a = 0; a < mod.dim; ++a) {
                    const RatFunc& c = rs.at(a, b);
                    if (!c.is_zero()) rows.at(row, a * dv + J) += c;
                }
                // - m_b x (sigma_i v_J)
                for (std::size_t K = 0; K < dv; ++K) {
                    const RatFunc& c = tv.at(K, J);
                    if (!c.is_zero()) rows.at(row, b * dv + K) -= c;
                }
                ++row;
            }
    }
    return rows;
}

/// Re-checks the symbolic rank at random rational points of (q, eta, a);
/// disagreement signals a non-generic stratum of the parameters.
inline void guard_generic_rank(const Matrix& spanning, std::size_t symbolic_rank,
                               unsigned seed = 0x9e3779b9u) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(2, 9);
    std::uniform_int_distribution<int> den(1, 7);
    for (int trial = 0; trial < 3; ++trial) {
        Bindings b;
        b.q = Rational(num(rng), den(rng)) + Rational(1);  // keeps q away from 0 and 1
        b.eta = Rational(num(rng), den(rng));
        b.a = Rational(num(rng), den(rng));
        b.u = Rational(num(rng), den(rng));
        const std::size_t r = exact_rank(spanning.specialize(b));
        if (r != symbolic_rank)
            throw NotWellDefined(
                "relation rank at a random rational point differs from the generic rank");
    }
}

}  // namespace detail

/// The duality functor on objects: W_M = M tensor_{H_q(l)} V^{tensor l}
/// with the Drinfeldian action
///   pi(x)  = id_M x Delta_q^{(l)}(x)            for x in U_q(sl(n+1)),
///   pi(xi) = sum over the xi coproduct, the slot-i xi marker acting as
///            right multiplication by u_i on M.
/// Every installed operator is checked to preserve the relation subspace
/// before the quotient is taken.
inline FunctorResult build_functor(const HeckeModule& mod, int n) {
    if (n < 2) throw RankTooSmall("the duality functor needs n >= 2");
    if (mod.l < 2) throw IndexOutOfRange("the duality functor needs l >= 2");
    const int l = mod.l;
    std::size_t dv = 1;
    for (int k = 0; k < l; ++k) dv *= static_cast<std::size_t>(n + 1);
    const std::size_t ambient = mod.dim * dv;

    Matrix spanning = detail::relation_rows(mod, n);
    Echelon ech = row_reduce(spanning);
    detail::guard_generic_rank(spanning, ech.rank());

    QuotientSpace qs;
    qs.ambient_dim = ambient;
    qs.relation_basis = std::move(ech.reduced);
    qs.pivot_columns = std::move(ech.pivot_cols);
    {
        std::vector<bool> is_pivot(ambient, false);
        for (std::size_t p : qs.pivot_columns) is_pivot[p] = true;
        for (std::size_t c = 0; c < ambient; ++c)
            if (!is_pivot[c]) qs.coset_columns.push_back(c);
    }
    qs.dim = qs.coset_columns.size();
    qs.projection = Matrix(qs.dim, ambient);
    for (std::size_t f = 0; f < qs.dim; ++f) qs.projection.at(f, qs.coset_columns[f]) = rf_one();
    for (std::size_t k = 0; k < qs.relation_basis.rows(); ++k) {
        const std::size_t p = qs.pivot_columns[k];
        for (std::size_t f = 0; f < qs.dim; ++f) {
            const RatFunc& c = qs.relation_basis.at(k, qs.coset_columns[f]);
            if (!c.is_zero()) qs.projection.at(f, p) = -c;
        }
    }
    qs.section = Matrix(ambient, qs.dim);
    for (std::size_t f = 0; f < qs.dim; ++f) qs.section.at(qs.coset_columns[f], f) = rf_one();

    const Matrix id_m = Matrix::identity(mod.dim);
    const UqRep tensor = tensor_power_rep(n, l);
    auto install = [&](const Matrix& ambient_op, const std::string& label) {
        if (!qs.preserves_relations(ambient_op))
            throw NotWellDefined("installed operator does not preserve the relation subspace: " +
                                 label);
        return qs.push(ambient_op);
    };

    DrinfeldianRep rep;
    rep.uq.n = n;
    rep.uq.legs = l;
    for (int i = 1; i <= n + 1; ++i) {
        rep.uq.qe_pos.push_back(install(kron(id_m, tensor.qe_pos[static_cast<std::size_t>(i - 1)]),
                                        "q^{e_" + std::to_string(i) + "}"));
        rep.uq.qe_neg.push_back(install(kron(id_m, tensor.qe_neg[static_cast<std::size_t>(i - 1)]),
                                        "q^{-e_" + std::to_string(i) + "}"));
    }
    for (int i = 1; i <= n; ++i) {
        rep.uq.e_pos.push_back(install(kron(id_m, tensor.e_pos[static_cast<std::size_t>(i - 1)]),
                                       "e_{+alpha_" + std::to_string(i) + "}"));
        rep.uq.e_neg.push_back(install(kron(id_m, tensor.e_neg[static_cast<std::size_t>(i - 1)]),
                                       "e_{-alpha_" + std::to_string(i) + "}"));
    }

    // The affine generator: the slot-i xi marker evaluates on V to the
    // weight -theta element (exactly as in the evaluation representation)
    // while the spectral parameter becomes right multiplication by u_i on M.
    const XiExpansion exp = xi_coproduct(n, l);
    const UqRep nat = natural_rep(n);
    const Matrix xi_base = eval_genword(etheta_tilde(n), nat);
    Matrix xi_ambient(ambient, ambient);
    for (const auto& s : exp.summands) {
        Matrix legs = Matrix::identity(1);
        for (std::size_t k = 0; k < s.legs.size(); ++k) {
            if (s.xi_slot && static_cast<std::size_t>(*s.xi_slot - 1) == k)
                legs = kron(legs, xi_base);
            else
                legs = kron(legs, eval_genword(s.legs[k], nat));
        }
        const Matrix& mpart = s.xi_slot ? mod.u_mat(*s.xi_slot) : id_m;
        xi_ambient = xi_ambient + kron(mpart, legs).scaled(s.coeff);
    }
    rep.xi = install(xi_ambient, "xi");

    FunctorResult out;
    out.quotient = std::move(qs);
    out.rep = std::move(rep);
    out.level_warning = l > n;
    return out;
}

/// Level check: every quotient weight must occur among the weights of
/// V^{tensor l}, i.e. have non-negative entries summing to l.
inline bool level_check(const DrinfeldianRep& rep, int l) {
    for (const auto& w : basis_weights(rep.uq)) {
        int sum = 0;
        for (int v : w) {
            if (v < 0) return false;
            sum += v;
        }
        if (sum != l) return false;
    }
    return true;
}

}  // namespace heckeforge
