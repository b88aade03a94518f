#pragma once

#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "heckeforge/errors.hpp"
#include "heckeforge/permutation.hpp"
#include "heckeforge/ratfunc.hpp"

namespace heckeforge {

/// Basis monomial u_1^{n_1} ... u_l^{n_l} * sigma_w, with the u powers on
/// the left of the permutation word. The canonical reduced word of w is
/// cached at construction so basis keys serialize deterministically.
struct NormalMonomial {
    std::vector<int> upows;
    Permutation perm;
    std::vector<int> word;

    NormalMonomial(std::vector<int> up, Permutation p)
        : upows(std::move(up)), perm(std::move(p)), word(perm.canonical_word()) {
        if (static_cast<int>(upows.size()) != perm.rank())
            throw RankMismatch("u-exponent vector length differs from permutation rank");
        for (int n : upows)
            if (n < 0) throw IndexOutOfRange("negative u exponent in normal monomial");
    }

    static NormalMonomial identity(int l) {
        return NormalMonomial(std::vector<int>(static_cast<std::size_t>(l), 0), Permutation(l));
    }

    int rank() const { return perm.rank(); }
    int total_udeg() const {
        int d = 0;
        for (int n : upows) d += n;
        return d;
    }

    friend bool operator==(const NormalMonomial& x, const NormalMonomial& y) {
        return x.upows == y.upows && x.perm == y.perm;
    }
    friend std::strong_ordering operator<=>(const NormalMonomial& x, const NormalMonomial& y) {
        if (auto c = x.upows <=> y.upows; c != 0) return c;
        return x.perm <=> y.perm;
    }
};

/// Finite linear combination of normal monomials over RatFunc. Zero
/// coefficients are never stored.
class AhaElement {
  public:
    using TermMap = std::map<NormalMonomial, RatFunc>;

    explicit AhaElement(int l) : l_(l) {
        if (l < 1) throw IndexOutOfRange("algebra rank must be >= 1");
    }

    static AhaElement zero(int l) { return AhaElement(l); }

    static AhaElement one(int l) {
        AhaElement e(l);
        e.terms_.emplace(NormalMonomial::identity(l), rf_one());
        return e;
    }

    /// The generator sigma_i, 1 <= i <= l-1.
    static AhaElement sigma(int l, int i) {
        AhaElement e(l);
        e.terms_.emplace(
            NormalMonomial(std::vector<int>(static_cast<std::size_t>(l), 0),
                           Permutation(l).times_s(i)),
            rf_one());
        return e;
    }

    /// The generator u_j, 1 <= j <= l.
    static AhaElement u_gen(int l, int j) {
        if (j < 1 || j > l) throw IndexOutOfRange("u generator index out of range");
        std::vector<int> up(static_cast<std::size_t>(l), 0);
        up[static_cast<std::size_t>(j - 1)] = 1;
        AhaElement e(l);
        e.terms_.emplace(NormalMonomial(std::move(up), Permutation(l)), rf_one());
        return e;
    }

    static AhaElement from_monomial(const NormalMonomial& m, const RatFunc& c) {
        AhaElement e(m.rank());
        e.add_term(m, c);
        return e;
    }

    /// sigma_w for a plain permutation word (no u part).
    static AhaElement from_permutation(const Permutation& w) {
        AhaElement e(w.rank());
        e.terms_.emplace(NormalMonomial(std::vector<int>(static_cast<std::size_t>(w.rank()), 0), w),
                         rf_one());
        return e;
    }

    int rank() const { return l_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const NormalMonomial& m, const RatFunc& c) {
        if (c.is_zero()) return;
        if (m.rank() != l_) throw RankMismatch("monomial rank differs from element rank");
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend AhaElement operator+(const AhaElement& x, const AhaElement& y) {
        if (x.l_ != y.l_) throw RankMismatch("element ranks differ");
        AhaElement r = x;
        for (const auto& [m, c] : y.terms_) r.add_term(m, c);
        return r;
    }

    friend AhaElement operator-(const AhaElement& x, const AhaElement& y) {
        if (x.l_ != y.l_) throw RankMismatch("element ranks differ");
        AhaElement r = x;
        for (const auto& [m, c] : y.terms_) r.add_term(m, -c);
        return r;
    }

    AhaElement scaled(const RatFunc& c) const {
        AhaElement r(l_);
        if (c.is_zero()) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }

    /// Left-multiplies every monomial by the u-monomial with the given
    /// exponents. u's commute, so this is a plain exponent shift.
    AhaElement u_shifted(const std::vector<int>& shift) const {
        AhaElement r(l_);
        for (const auto& [m, c] : terms_) {
            std::vector<int> up = m.upows;
            for (std::size_t k = 0; k < up.size(); ++k) up[k] += shift[k];
            r.terms_.emplace(NormalMonomial(std::move(up), m.perm), c);
        }
        return r;
    }

    AhaElement specialize(const Bindings& b) const {
        AhaElement r(l_);
        for (const auto& [m, c] : terms_) r.add_term(m, c.specialize(b));
        return r;
    }

    friend bool operator==(const AhaElement& x, const AhaElement& y) {
        if (x.l_ != y.l_) return false;
        if (x.terms_.size() != y.terms_.size()) return false;
        auto it = x.terms_.begin();
        auto jt = y.terms_.begin();
        for (; it != x.terms_.end(); ++it, ++jt) {
            if (!(it->first == jt->first)) return false;
            if (!(it->second == jt->second)) return false;
        }
        return true;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << "  +  ";
            first = false;
            os << "(" << c.to_string() << ")";
            for (std::size_t j = 0; j < m.upows.size(); ++j) {
                if (m.upows[j] == 0) continue;
                os << " u" << (j + 1);
                if (m.upows[j] != 1) os << "^" << m.upows[j];
            }
            for (int g : m.word) os << " s" << g;
        }
        return os.str();
    }

  private:
    int l_;
    TermMap terms_;
};

/// Structure constants of the straightening rules. The engine multiplies in
/// the algebra presented by
///     sigma_i^2               = quad * sigma_i + 1
///     sigma_i u_i             = u_{i+1} sigma_i + cross_u * u_{i+1} + cross_c
///     sigma_i u_{i+1}         = u_i sigma_i     - cross_u * u_{i+1} - cross_c
///     u_j u_k = u_k u_j,  sigma_i u_j = u_j sigma_i (j != i, i+1)
/// The named constructors give the presentations actually used; custom
/// constants exist so that verifiers can be fed corrupted rule sets.
struct AhaContext {
    int l;
    RatFunc quad;
    RatFunc cross_u;
    RatFunc cross_c;

    /// Modified affine Hecke algebra at generic q, eta:
    /// sigma_i u_i = u_{i+1} sigma_i^{-1} + eta.
    static AhaContext modified(int l) {
        return AhaContext{l, rf_q_minus_qinv(), -rf_q_minus_qinv(), rf_eta()};
    }

    /// q = 1, eta generic: the degenerate affine Hecke algebra,
    /// sigma_i u_i = u_{i+1} sigma_i + eta.
    static AhaContext degenerate_q1(int l) {
        return AhaContext{l, rf_zero(), rf_zero(), rf_eta()};
    }

    /// q = 1 and eta = 0: the symmetric group with commuting affine letters.
    static AhaContext symmetric_q1_eta0(int l) {
        return AhaContext{l, rf_zero(), rf_zero(), rf_zero()};
    }

    /// Shift of the singular transform u_j = z_j + cross_c/quad.
    RatFunc affine_shift() const {
        if (cross_c.is_zero()) return rf_zero();
        return cross_c / quad;
    }
};

namespace detail {

/// sigma_w * u_j in normal form, by pushing u_j leftward through the last
/// letter of a reduced word of w and recursing on the prefix.
AhaElement sigma_word_times_u(const Permutation& w, int j, const AhaContext& ctx);

}  // namespace detail

/// x * sigma_i in normal form: sigma_w sigma_i is sigma_{w s_i} when the
/// length goes up, else sigma_{w s_i} + quad * sigma_w.
inline AhaElement mul_sigma(const AhaElement& x, int i, const AhaContext& ctx) {
    AhaElement r(x.rank());
    for (const auto& [m, c] : x.terms()) {
        Permutation ws = m.perm.times_s(i);
        r.add_term(NormalMonomial(m.upows, ws), c);
        if (!m.perm.right_ascent(i)) r.add_term(m, c * ctx.quad);
    }
    return r;
}

/// x * u_j in normal form.
inline AhaElement mul_u(const AhaElement& x, int j, const AhaContext& ctx) {
    AhaElement r(x.rank());
    for (const auto& [m, c] : x.terms()) {
        AhaElement moved = detail::sigma_word_times_u(m.perm, j, ctx);
        r = r + moved.u_shifted(m.upows).scaled(c);
    }
    return r;
}

namespace detail {

inline AhaElement sigma_word_times_u(const Permutation& w, int j, const AhaContext& ctx) {
    const int l = w.rank();
    if (w.is_identity()) return AhaElement::u_gen(l, j);
    const std::vector<int> word = w.canonical_word();
    const int i = word.back();
    const Permutation prefix = w.times_s(i);  // strips the last letter

    if (j != i && j != i + 1) {
        return mul_sigma(sigma_word_times_u(prefix, j, ctx), i, ctx);
    }
    if (j == i) {
        // sigma_i u_i = u_{i+1} sigma_i + cross_u u_{i+1} + cross_c
        AhaElement a = sigma_word_times_u(prefix, i + 1, ctx);
        AhaElement r = mul_sigma(a, i, ctx) + a.scaled(ctx.cross_u);
        if (!ctx.cross_c.is_zero())
            r = r + AhaElement::from_permutation(prefix).scaled(ctx.cross_c);
        return r;
    }
    // sigma_i u_{i+1} = u_i sigma_i - cross_u u_{i+1} - cross_c
    AhaElement b = sigma_word_times_u(prefix, i, ctx);
    AhaElement a = sigma_word_times_u(prefix, i + 1, ctx);
    AhaElement r = mul_sigma(b, i, ctx) - a.scaled(ctx.cross_u);
    if (!ctx.cross_c.is_zero()) r = r - AhaElement::from_permutation(prefix).scaled(ctx.cross_c);
    return r;
}

}  // namespace detail

/// Product in normal form. Multiplies x by y's monomials generator by
/// generator, straightening as it goes.
inline AhaElement aha_mul(const AhaElement& x, const AhaElement& y, const AhaContext& ctx) {
    if (x.rank() != y.rank()) throw RankMismatch("cannot multiply elements of different rank");
    AhaElement result(x.rank());
    for (const auto& [m, c] : y.terms()) {
        AhaElement acc = x;
        for (std::size_t j = 0; j < m.upows.size(); ++j)
            for (int rep = 0; rep < m.upows[j]; ++rep)
                acc = mul_u(acc, static_cast<int>(j) + 1, ctx);
        for (int g : m.word) acc = mul_sigma(acc, g, ctx);
        result = result + acc.scaled(c);
    }
    return result;
}

/// sigma_i^{-1} = sigma_i - quad, eliminated eagerly everywhere.
inline AhaElement sigma_inverse(int l, int i, const AhaContext& ctx) {
    return AhaElement::sigma(l, i) - AhaElement::one(l).scaled(ctx.quad);
}

namespace detail {

/// Expands prod_j (u_j + shift)^{n_j} * sigma_w.
inline AhaElement shift_expand(const AhaElement& x, const RatFunc& shift) {
    const int l = x.rank();
    AhaElement out(l);
    for (const auto& [m, c] : x.terms()) {
        // binomial expansion, one u variable at a time
        std::vector<std::pair<std::vector<int>, RatFunc>> partial;
        partial.emplace_back(std::vector<int>(static_cast<std::size_t>(l), 0), c);
        for (std::size_t j = 0; j < m.upows.size(); ++j) {
            const int n = m.upows[j];
            if (n == 0) continue;
            std::vector<std::pair<std::vector<int>, RatFunc>> next;
            // (u_j + shift)^n = sum_k C(n,k) shift^{n-k} u_j^k
            std::vector<RatFunc> coef(static_cast<std::size_t>(n) + 1, rf_one());
            Rational binom(1);
            RatFunc spow = rf_one();
            for (int k = n; k >= 0; --k) {
                coef[static_cast<std::size_t>(k)] = RatFunc::from_rational(binom) * spow;
                if (k > 0) {
                    binom = binom * Rational(k) / Rational(n - k + 1);
                    spow = spow * shift;
                }
            }
            for (const auto& [up, pc] : partial) {
                for (int k = 0; k <= n; ++k) {
                    const RatFunc kc = pc * coef[static_cast<std::size_t>(k)];
                    if (kc.is_zero()) continue;
                    std::vector<int> up2 = up;
                    up2[j] = k;
                    next.emplace_back(std::move(up2), kc);
                }
            }
            partial = std::move(next);
        }
        for (const auto& [up, pc] : partial) out.add_term(NormalMonomial(up, m.perm), pc);
    }
    return out;
}

}  // namespace detail

/// Reads the element's u-exponents as z-exponents and rewrites in the u
/// generators: z_j = u_j - shift with shift = cross_c/quad. Inverse of
/// z_from_u; the identity map when the shift vanishes.
inline AhaElement u_from_z(const AhaElement& z_elem, const AhaContext& ctx) {
    const RatFunc s = ctx.affine_shift();
    if (s.is_zero()) return z_elem;
    return detail::shift_expand(z_elem, -s);
}

/// Rewrites a u-presentation element in the z generators (result's
/// u-exponents are to be read as z-exponents): u_j = z_j + shift.
inline AhaElement z_from_u(const AhaElement& u_elem, const AhaContext& ctx) {
    const RatFunc s = ctx.affine_shift();
    if (s.is_zero()) return u_elem;
    return detail::shift_expand(u_elem, s);
}

/// All normal monomials of total u-degree <= max_udeg, graded by degree,
/// then lexicographic in the exponent vector, then in permutation images.
inline std::vector<NormalMonomial> enumerate_basis(int l, int max_udeg) {
    if (l < 1) throw IndexOutOfRange("enumerate_basis: l must be >= 1");
    if (max_udeg < 0) throw IndexOutOfRange("enumerate_basis: max_udeg must be >= 0");
    const std::vector<Permutation> perms = all_permutations(l);

    std::vector<std::vector<int>> exps;
    std::vector<int> cur(static_cast<std::size_t>(l), 0);
    auto gen = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == l) {
            exps.push_back(cur);
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            cur[static_cast<std::size_t>(pos)] = k;
            self(self, pos + 1, remaining - k);
        }
        cur[static_cast<std::size_t>(pos)] = 0;
    };

    std::vector<NormalMonomial> out;
    for (int d = 0; d <= max_udeg; ++d) {
        exps.clear();
        gen(gen, 0, d);
        std::vector<std::vector<int>> degree_d;
        for (auto& e : exps) {
            int s = 0;
            for (int v : e) s += v;
            if (s == d) degree_d.push_back(e);
        }
        std::sort(degree_d.begin(), degree_d.end());
        for (const auto& e : degree_d)
            for (const auto& w : perms) out.emplace_back(e, w);
    }
    return out;
}

}  // namespace heckeforge
