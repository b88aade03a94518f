#pragma once

#include <string>
#include <vector>

#include "heckeforge/aha.hpp"
#include "heckeforge/matrix.hpp"

namespace heckeforge {

/// Finite-dimensional right module of the modified affine Hecke algebra.
///
/// Matrices act on coordinate columns of module elements: coords(x * g) =
/// R(g) * coords(x). Under this convention the right action is an
/// anti-homomorphism, R(g h) = R(h) R(g), so relation words reverse when
/// checked in matrix form.
struct HeckeModule {
    int l = 0;
    std::size_t dim = 0;
    std::vector<Matrix> sigma;  // l-1 generators
    std::vector<Matrix> u;      // l generators

    const Matrix& sigma_mat(int i) const { return sigma[static_cast<std::size_t>(i - 1)]; }
    const Matrix& u_mat(int j) const { return u[static_cast<std::size_t>(j - 1)]; }

    /// Right action of sigma_i^{-1} = sigma_i - (q - q^{-1}).
    Matrix sigma_inv_mat(int i) const {
        return sigma_mat(i) - Matrix::scalar(dim, rf_q_minus_qinv());
    }

    HeckeModule specialize(const Bindings& b) const {
        HeckeModule m;
        m.l = l;
        m.dim = dim;
        for (const auto& s : sigma) m.sigma.push_back(s.specialize(b));
        for (const auto& uu : u) m.u.push_back(uu.specialize(b));
        return m;
    }
};

/// One-dimensional module families pinned down by the cross relation:
/// trivial: sigma = (q),      u_1 = (a), u_{j+1} = q^2 u_j - q eta;
/// sign:    sigma = (-q^{-1}), u_1 = (a), u_{j+1} = q^{-2} u_j + q^{-1} eta.
enum class BuiltinModule { trivial, sign };

inline HeckeModule builtin_module(BuiltinModule kind, int l, const RatFunc& a) {
    if (l < 2) throw IndexOutOfRange("builtin modules need l >= 2");
    HeckeModule m;
    m.l = l;
    m.dim = 1;
    const RatFunc sig =
        kind == BuiltinModule::trivial ? RatFunc::q_power(1) : -RatFunc::q_power(-1);
    for (int i = 1; i < l; ++i) m.sigma.push_back(Matrix::scalar(1, sig));
    RatFunc uj = a;
    m.u.push_back(Matrix::scalar(1, uj));
    for (int j = 2; j <= l; ++j) {
        if (kind == BuiltinModule::trivial)
            uj = RatFunc::q_power(2) * uj - RatFunc::q_power(1) * rf_eta();
        else
            uj = RatFunc::q_power(-2) * uj + RatFunc::q_power(-1) * rf_eta();
        m.u.push_back(Matrix::scalar(1, uj));
    }
    // the construction must satisfy the cross relation on the nose
    for (int i = 1; i < l; ++i) {
        Matrix lhs = m.u_mat(i) * m.sigma_mat(i);
        Matrix rhs = m.sigma_inv_mat(i) * m.u_mat(i + 1) + Matrix::scalar(1, rf_eta());
        if (!(lhs == rhs)) throw std::logic_error("builtin module violates the cross relation");
    }
    return m;
}

inline HeckeModule builtin_module(BuiltinModule kind, int l) {
    return builtin_module(kind, l, RatFunc::variable(Var::a));
}

}  // namespace heckeforge
