#pragma once

#include <optional>
#include <string>

#include "heckeforge/errors.hpp"
#include "heckeforge/laurent.hpp"

namespace heckeforge {

/// Partial assignment of rational values to the scalar variables.
struct Bindings {
    std::optional<Rational> q;
    std::optional<Rational> eta;
    std::optional<Rational> u;
    std::optional<Rational> a;

    bool empty() const { return !q && !eta && !u && !a; }
};

/// Element of the field of rational functions in q, eta, u, a.
///
/// Representation is a num/den pair of Laurent polynomials, kept in the
/// normal form: common monomial factor and common rational content removed,
/// denominator leading coefficient positive, and den replaced by 1 whenever
/// it divides num exactly. Full multivariate gcd reduction is deliberately
/// not performed; equality is decided by cross-multiplication.
class RatFunc {
  public:
    RatFunc() : num_(), den_(LaurentPoly::constant(Rational(1))) {}

    RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        normalize();
    }

    /* implicit */ RatFunc(const LaurentPoly& p)
        : num_(p), den_(LaurentPoly::constant(Rational(1))) {}

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return from_rational(Rational(1)); }
    static RatFunc from_int(long v) { return from_rational(Rational(v)); }
    static RatFunc from_rational(const Rational& c) { return RatFunc(LaurentPoly::constant(c)); }
    static RatFunc variable(Var v, int power = 1) {
        if (power >= 0 || v == Var::q) return RatFunc(LaurentPoly::variable(v, power));
        return RatFunc(LaurentPoly::constant(Rational(1)), LaurentPoly::variable(v, -power));
    }
    /// The Laurent monomial q^k as a scalar.
    static RatFunc q_power(int k) { return RatFunc(LaurentPoly::variable(Var::q, k)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    /// Exact equality in the field, by cross-multiplication.
    friend bool operator==(const RatFunc& x, const RatFunc& y) {
        if (x.num_.is_zero()) return y.num_.is_zero();
        if (y.num_.is_zero()) return false;
        return (x.num_ * y.den_) == (y.num_ * x.den_);
    }

    friend RatFunc operator+(const RatFunc& x, const RatFunc& y) {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        if (x.den_ == y.den_) return RatFunc(x.num_ + y.num_, x.den_);
        return RatFunc(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }

    friend RatFunc operator-(const RatFunc& x, const RatFunc& y) {
        if (y.is_zero()) return x;
        if (x.den_ == y.den_) return RatFunc(x.num_ - y.num_, x.den_);
        return RatFunc(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }

    friend RatFunc operator-(const RatFunc& x) {
        RatFunc r = x;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator*(const RatFunc& x, const RatFunc& y) {
        if (x.is_zero() || y.is_zero()) return RatFunc();
        return RatFunc(x.num_ * y.num_, x.den_ * y.den_);
    }

    friend RatFunc operator/(const RatFunc& x, const RatFunc& y) {
        if (y.is_zero()) throw DivisionByZero("division of rational functions by zero");
        if (x.is_zero()) return RatFunc();
        return RatFunc(x.num_ * y.den_, x.den_ * y.num_);
    }

    RatFunc& operator+=(const RatFunc& y) { return *this = *this + y; }
    RatFunc& operator-=(const RatFunc& y) { return *this = *this - y; }
    RatFunc& operator*=(const RatFunc& y) { return *this = *this * y; }
    RatFunc& operator/=(const RatFunc& y) { return *this = *this / y; }

    RatFunc inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        return RatFunc(den_, num_);
    }

    /// Substitutes bound variables. Throws SingularSpecialization when the
    /// denominator vanishes identically under the bindings.
    RatFunc specialize(const Bindings& b) const {
        LaurentPoly d = den_.specialize(b.q, b.eta, b.u, b.a);
        if (d.is_zero())
            throw SingularSpecialization("denominator vanishes under specialization: " +
                                         den_.to_string());
        LaurentPoly n = num_.specialize(b.q, b.eta, b.u, b.a);
        return RatFunc(std::move(n), std::move(d));
    }

    /// The constant value, if this scalar is a plain rational.
    std::optional<Rational> as_rational() const {
        if (num_.is_zero()) return Rational(0);
        if (num_.term_count() == 1 && den_.term_count() == 1) {
            const auto& nt = *num_.terms().begin();
            const auto& dt = *den_.terms().begin();
            if (nt.first.is_constant() && dt.first.is_constant()) return nt.second / dt.second;
        }
        return std::nullopt;
    }

    /// Complexity measure used for pivot selection in exact elimination.
    std::size_t complexity() const {
        return num_.term_count() + den_.term_count() +
               static_cast<std::size_t>(num_.total_degree() + den_.total_degree());
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

  private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = LaurentPoly::constant(Rational(1));
            return;
        }
        // common monomial factor across num and den
        Exponents mn = num_.min_exponents();
        Exponents md = den_.min_exponents();
        Exponents common{std::min(mn.q, md.q), std::min(mn.eta, md.eta), std::min(mn.u, md.u),
                         std::min(mn.a, md.a)};
        if (!common.is_constant()) {
            Exponents neg{-common.q, -common.eta, -common.u, -common.a};
            num_ = num_.shifted(neg);
            den_ = den_.shifted(neg);
        }
        if (!den_.is_one()) {
            if (auto quot = LaurentPoly::try_exact_divide(num_, den_)) {
                num_ = std::move(*quot);
                den_ = LaurentPoly::constant(Rational(1));
            }
        }
        // common rational content
        Rational g = rational_gcd(num_.content(), den_.content());
        if (den_.leading_term().second < 0) g = -g;
        if (g != Rational(1)) {
            Rational ginv = rational_inv(g);
            num_ = num_.scaled(ginv);
            den_ = den_.scaled(ginv);
        }
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

/// Convenience scalars used throughout the algebra layers.
inline const RatFunc& rf_zero() {
    static const RatFunc v = RatFunc::zero();
    return v;
}
inline const RatFunc& rf_one() {
    static const RatFunc v = RatFunc::one();
    return v;
}
/// q - q^{-1}, the Hecke structure constant.
inline const RatFunc& rf_q_minus_qinv() {
    static const RatFunc v = RatFunc::q_power(1) - RatFunc::q_power(-1);
    return v;
}
inline const RatFunc& rf_eta() {
    static const RatFunc v = RatFunc::variable(Var::eta);
    return v;
}

inline RatFunc qnum_rf(int m) { return RatFunc(qnum(m)); }

}  // namespace heckeforge
