#pragma once

#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "heckeforge/errors.hpp"
#include "heckeforge/rational.hpp"

namespace heckeforge {

/// The closed variable set of the scalar field.
enum class Var { q, eta, u, a };

/// Exponent vector of one monomial. q may be negative (Laurent); eta, u, a
/// are ordinary polynomial variables. The defaulted comparison is the fixed
/// total monomial order: lexicographic on (q, eta, u, a).
struct Exponents {
    int q = 0;
    int eta = 0;
    int u = 0;
    int a = 0;

    friend auto operator<=>(const Exponents&, const Exponents&) = default;

    bool is_constant() const { return q == 0 && eta == 0 && u == 0 && a == 0; }
    int total_degree() const { return (q < 0 ? -q : q) + eta + u + a; }

    Exponents operator+(const Exponents& o) const {
        return Exponents{q + o.q, eta + o.eta, u + o.u, a + o.a};
    }
    Exponents operator-(const Exponents& o) const {
        return Exponents{q - o.q, eta - o.eta, u - o.u, a - o.a};
    }
};

/// Multivariate Laurent polynomial in q, eta, u, a over the rationals.
/// The term map never stores a zero coefficient; the zero polynomial is the
/// empty map. Map order is the fixed monomial order, so iteration (and hence
/// serialization) is deterministic.
class LaurentPoly {
  public:
    using TermMap = std::map<Exponents, Rational>;

    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }

    static LaurentPoly constant(const Rational& c) {
        LaurentPoly p;
        if (!heckeforge::is_zero(c)) p.terms_[Exponents{}] = c;
        return p;
    }

    static LaurentPoly monomial(const Rational& c, const Exponents& e) {
        if (e.eta < 0 || e.u < 0 || e.a < 0)
            throw IndexOutOfRange("laurent monomial: eta/u/a exponents must be non-negative");
        LaurentPoly p;
        if (!heckeforge::is_zero(c)) p.terms_[e] = c;
        return p;
    }

    static LaurentPoly variable(Var v, int power = 1) {
        Exponents e;
        switch (v) {
            case Var::q: e.q = power; break;
            case Var::eta: e.eta = power; break;
            case Var::u: e.u = power; break;
            case Var::a: e.a = power; break;
        }
        return monomial(Rational(1), e);
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_constant() &&
               terms_.begin()->second == Rational(1);
    }

    /// Largest monomial under the fixed order, with its coefficient.
    const std::pair<const Exponents, Rational>& leading_term() const {
        if (terms_.empty()) throw IndexOutOfRange("leading term of zero polynomial");
        return *terms_.rbegin();
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.total_degree());
        return d;
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (heckeforge::is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (heckeforge::is_zero(it->second)) terms_.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) {
        LaurentPoly r = x;
        for (const auto& [e, c] : y.terms_) r.add_term(e, c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) {
        LaurentPoly r = x;
        for (const auto& [e, c] : y.terms_) r.add_term(e, -c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& x) {
        LaurentPoly r;
        for (const auto& [e, c] : x.terms_) r.terms_[e] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
        LaurentPoly r;
        for (const auto& [ex, cx] : x.terms_)
            for (const auto& [ey, cy] : y.terms_) r.add_term(ex + ey, cx * cy);
        return r;
    }

    LaurentPoly scaled(const Rational& c) const {
        LaurentPoly r;
        if (heckeforge::is_zero(c)) return r;
        for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
        return r;
    }

    LaurentPoly shifted(const Exponents& m) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e + m] = c;
        return r;
    }

    friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
        return x.terms_ == y.terms_;
    }

    /// Positive rational g with (*this)/g primitive over the integers.
    Rational content() const {
        Rational g(0);
        for (const auto& [e, c] : terms_) g = rational_gcd(g, c);
        return g;
    }

    /// Componentwise minimum of all exponent vectors (the largest common
    /// monomial factor). Meaningless for the zero polynomial.
    Exponents min_exponents() const {
        if (terms_.empty()) throw IndexOutOfRange("min exponents of zero polynomial");
        Exponents m = terms_.begin()->first;
        for (const auto& [e, c] : terms_) {
            m.q = std::min(m.q, e.q);
            m.eta = std::min(m.eta, e.eta);
            m.u = std::min(m.u, e.u);
            m.a = std::min(m.a, e.a);
        }
        return m;
    }

    /// Exact division; nullopt if the divisor does not divide exactly within
    /// the step budget. Steps walk leading terms downward, so exact quotients
    /// are found in #terms(quotient) steps.
    static std::optional<LaurentPoly> try_exact_divide(const LaurentPoly& p,
                                                       const LaurentPoly& d,
                                                       std::size_t max_steps = 20000) {
        if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
        if (p.is_zero()) return LaurentPoly();
        if (d.is_one()) return p;
        LaurentPoly rem = p;
        LaurentPoly quot;
        const auto& dl = d.leading_term();
        std::size_t steps = 0;
        while (!rem.is_zero()) {
            if (++steps > max_steps) return std::nullopt;
            const auto& rl = rem.leading_term();
            Exponents me = rl.first - dl.first;
            if (me.eta < 0 || me.u < 0 || me.a < 0) return std::nullopt;
            Rational mc = rl.second / dl.second;
            quot.add_term(me, mc);
            rem = rem - d.shifted(me).scaled(mc);
        }
        return quot;
    }

    /// Substitutes rationals for a subset of the variables. Unbound
    /// variables survive symbolically. A q binding of zero is rejected
    /// because negative q powers would be meaningless.
    LaurentPoly specialize(const std::optional<Rational>& qv, const std::optional<Rational>& etav,
                           const std::optional<Rational>& uv,
                           const std::optional<Rational>& av) const {
        if (qv && qv->is_zero())
            throw std::invalid_argument("specialize: q must be bound to a non-zero value");
        LaurentPoly r;
        for (const auto& [e, c] : terms_) {
            Rational k = c;
            Exponents rest = e;
            if (qv) {
                k *= rational_pow(*qv, e.q);
                rest.q = 0;
            }
            if (etav) {
                k *= rational_pow(*etav, e.eta);
                rest.eta = 0;
            }
            if (uv) {
                k *= rational_pow(*uv, e.u);
                rest.u = 0;
            }
            if (av) {
                k *= rational_pow(*av, e.a);
                rest.a = 0;
            }
            r.add_term(rest, k);
        }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << rational_to_string(c);
            auto var = [&os](const char* name, int p) {
                if (p == 0) return;
                os << "*" << name;
                if (p != 1) os << "^" << p;
            };
            var("q", e.q);
            var("eta", e.eta);
            var("u", e.u);
            var("a", e.a);
        }
        return os.str();
    }

  private:
    TermMap terms_;
};

/// The q-number [m] = q^{m-1} + q^{m-3} + ... + q^{1-m}, with [-m] = -[m].
inline LaurentPoly qnum(int m) {
    if (m == 0) return LaurentPoly::zero();
    const bool neg = m < 0;
    const int n = neg ? -m : m;
    LaurentPoly p;
    for (int k = n - 1; k >= 1 - n; k -= 2)
        p.add_term(Exponents{k, 0, 0, 0}, Rational(neg ? -1 : 1));
    return p;
}

}  // namespace heckeforge
