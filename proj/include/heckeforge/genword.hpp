#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "heckeforge/errors.hpp"
#include "heckeforge/ratfunc.hpp"
#include "heckeforge/rootdata.hpp"

namespace heckeforge {

/// Generator symbol of U_q(sl(n+1)) extended by the affine element xi.
///
///   CartanExp c     -> q^{sum_i c_i e_ii}
///   CartanBracket   -> [sum_i c_i e_ii + shift]_q  (q-number of a Cartan word)
///   Root (i, j)     -> e_{ij}, i != j; |i-j| = 1 are the Chevalley elements
///   Xi              -> xi_{delta-theta}
struct GenSymbol {
    enum class Kind { CartanExp, CartanBracket, Root, Xi };

    Kind kind;
    std::vector<int> cartan;  // e_ii coefficients (CartanExp / CartanBracket)
    int shift = 0;            // CartanBracket only
    int i = 0, j = 0;         // Root only, 1-based

    static GenSymbol cartan_exp(std::vector<int> c) {
        return GenSymbol{Kind::CartanExp, std::move(c), 0, 0, 0};
    }
    static GenSymbol cartan_bracket(std::vector<int> c, int shift) {
        return GenSymbol{Kind::CartanBracket, std::move(c), shift, 0, 0};
    }
    static GenSymbol root(int i, int j) {
        if (i == j) throw IndexOutOfRange("root symbol e_ii is not a generator");
        return GenSymbol{Kind::Root, {}, 0, i, j};
    }
    static GenSymbol xi() { return GenSymbol{Kind::Xi, {}, 0, 0, 0}; }

    std::vector<int> weight(const RootData& rd) const {
        std::vector<int> w(static_cast<std::size_t>(rd.dim()), 0);
        if (kind == Kind::Root) {
            w[static_cast<std::size_t>(i - 1)] += 1;
            w[static_cast<std::size_t>(j - 1)] -= 1;
        } else if (kind == Kind::Xi) {
            // finite weight -theta; the imaginary part pairs to zero
            w.front() -= 1;
            w.back() += 1;
        }
        return w;
    }
};

struct GenTerm {
    RatFunc coeff;
    std::vector<GenSymbol> syms;
};

/// Formal linear combination of products of generator symbols, never
/// simplified symbolically; simplification happens at the matrix level.
class GenWord {
  public:
    explicit GenWord(int rank) : n_(rank) {
        if (rank < 1) throw RankTooSmall("generator word needs rank >= 1");
    }

    static GenWord zero(int n) { return GenWord(n); }

    static GenWord one(int n) {
        GenWord w(n);
        w.terms_.push_back({rf_one(), {}});
        return w;
    }

    static GenWord symbol(int n, GenSymbol s) {
        GenWord w(n);
        w.terms_.push_back({rf_one(), {std::move(s)}});
        return w;
    }

    /// q^{e_ii} with a single unit coefficient at position i.
    static GenWord cartan_unit(int n, int i, int power) {
        std::vector<int> c(static_cast<std::size_t>(n + 1), 0);
        c[static_cast<std::size_t>(i - 1)] = power;
        return symbol(n, GenSymbol::cartan_exp(std::move(c)));
    }

    /// q^{h_{alpha_i}} = q^{e_ii} q^{-e_{i+1,i+1}} as a single CartanExp.
    static GenWord cartan_h(int n, int i, int power) {
        RootData rd(n);
        std::vector<int> c = rd.h_alpha(i);
        for (auto& v : c) v *= power;
        return symbol(n, GenSymbol::cartan_exp(std::move(c)));
    }

    static GenWord chevalley(int n, int i, bool positive) {
        if (i < 1 || i > n) throw IndexOutOfRange("chevalley index out of range");
        return symbol(n, positive ? GenSymbol::root(i, i + 1) : GenSymbol::root(i + 1, i));
    }

    int rank() const { return n_; }
    const std::vector<GenTerm>& terms() const { return terms_; }
    bool contains_xi() const {
        for (const auto& t : terms_)
            for (const auto& s : t.syms)
                if (s.kind == GenSymbol::Kind::Xi) return true;
        return false;
    }

    friend GenWord operator+(const GenWord& x, const GenWord& y) {
        if (x.n_ != y.n_) throw RankMismatch("generator word ranks differ");
        GenWord r = x;
        r.terms_.insert(r.terms_.end(), y.terms_.begin(), y.terms_.end());
        return r;
    }

    friend GenWord operator-(const GenWord& x, const GenWord& y) { return x + y.scaled(-rf_one()); }

    friend GenWord operator*(const GenWord& x, const GenWord& y) {
        if (x.n_ != y.n_) throw RankMismatch("generator word ranks differ");
        GenWord r(x.n_);
        for (const auto& tx : x.terms_)
            for (const auto& ty : y.terms_) {
                GenTerm t;
                t.coeff = tx.coeff * ty.coeff;
                if (t.coeff.is_zero()) continue;
                t.syms = tx.syms;
                t.syms.insert(t.syms.end(), ty.syms.begin(), ty.syms.end());
                r.terms_.push_back(std::move(t));
            }
        return r;
    }

    GenWord scaled(const RatFunc& c) const {
        GenWord r(n_);
        if (c.is_zero()) return r;
        for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, t.syms});
        return r;
    }

    /// Weight of the word in the epsilon basis; requires all terms to agree.
    std::vector<int> weight() const {
        RootData rd(n_);
        std::optional<std::vector<int>> w;
        for (const auto& t : terms_) {
            std::vector<int> tw(static_cast<std::size_t>(rd.dim()), 0);
            for (const auto& s : t.syms) {
                const auto sw = s.weight(rd);
                for (std::size_t k = 0; k < tw.size(); ++k) tw[k] += sw[k];
            }
            if (!w)
                w = tw;
            else if (*w != tw)
                throw std::invalid_argument("weight of an inhomogeneous generator word");
        }
        if (!w) return std::vector<int>(static_cast<std::size_t>(rd.dim()), 0);
        return *w;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << t.coeff.to_string() << ")";
            for (const auto& s : t.syms) {
                switch (s.kind) {
                    case GenSymbol::Kind::CartanExp: {
                        os << " qC[";
                        for (std::size_t k = 0; k < s.cartan.size(); ++k)
                            os << (k ? "," : "") << s.cartan[k];
                        os << "]";
                        break;
                    }
                    case GenSymbol::Kind::CartanBracket: {
                        os << " [C";
                        for (std::size_t k = 0; k < s.cartan.size(); ++k)
                            os << (k ? "," : ";") << s.cartan[k];
                        if (s.shift) os << "+" << s.shift;
                        os << "]";
                        break;
                    }
                    case GenSymbol::Kind::Root: os << " e(" << s.i << "," << s.j << ")"; break;
                    case GenSymbol::Kind::Xi: os << " xi"; break;
                }
            }
        }
        return os.str();
    }

  private:
    int n_;
    std::vector<GenTerm> terms_;
};

/// q-commutator [x, y]_{q^{sign}} = x y - q^{sign * (wt x, wt y)} y x.
/// sign = 0 gives the plain commutator.
inline GenWord qcomm(const GenWord& x, const GenWord& y, int sign) {
    int p = 0;
    if (sign != 0) p = sign * RootData::pairing(x.weight(), y.weight());
    return x * y - (y * x).scaled(RatFunc::q_power(p));
}

inline GenWord root_vector(int n, int i, int j);

/// Composite root vector by the fixed normal ordering with an explicit
/// splitting index: e_{ij} = [e_{ik}, e_{kj}]_{q^{-1}} for i < k < j and
/// e_{ji} = [e_{jk}, e_{ki}]_q. Splitting independence is a verified
/// property, not an assumption; sub-vectors split canonically.
inline GenWord root_vector_split(int n, int i, int j, int k) {
    if (i < 1 || j < 1 || i > n + 1 || j > n + 1 || i == j)
        throw IndexOutOfRange("root vector indices out of range");
    const int lo = std::min(i, j), hi = std::max(i, j);
    if (hi - lo == 1) {
        if (k != 0) throw IndexOutOfRange("no splitting index for a simple root");
        return GenWord::symbol(n, GenSymbol::root(i, j));
    }
    if (k <= lo || k >= hi) throw IndexOutOfRange("splitting index must lie strictly between");
    return qcomm(root_vector(n, i, k), root_vector(n, k, j), i < j ? -1 : +1);
}

/// Canonical composite root vector (splitting at the smallest admissible k).
inline GenWord root_vector(int n, int i, int j) {
    const int lo = std::min(i, j), hi = std::max(i, j);
    return root_vector_split(n, i, j, hi - lo == 1 ? 0 : lo + 1);
}

/// Rewrites composite roots and Cartan brackets in terms of Chevalley
/// generators and Cartan exponentials; xi symbols pass through.
inline GenWord expand_composites(const GenWord& x) {
    const int n = x.rank();
    GenWord out(n);
    for (const auto& t : x.terms()) {
        GenWord acc = GenWord::one(n).scaled(t.coeff);
        for (const auto& s : t.syms) {
            switch (s.kind) {
                case GenSymbol::Kind::CartanExp:
                case GenSymbol::Kind::Xi: acc = acc * GenWord::symbol(n, s); break;
                case GenSymbol::Kind::Root: {
                    if (std::abs(s.i - s.j) == 1) {
                        acc = acc * GenWord::symbol(n, s);
                    } else {
                        acc = acc * expand_composites(root_vector(n, s.i, s.j));
                    }
                    break;
                }
                case GenSymbol::Kind::CartanBracket: {
                    // [C + s]_q = (q^s q^C - q^{-s} q^{-C}) / (q - q^{-1})
                    std::vector<int> neg = s.cartan;
                    for (auto& v : neg) v = -v;
                    GenWord pos = GenWord::symbol(n, GenSymbol::cartan_exp(s.cartan))
                                      .scaled(RatFunc::q_power(s.shift));
                    GenWord negw = GenWord::symbol(n, GenSymbol::cartan_exp(std::move(neg)))
                                       .scaled(RatFunc::q_power(-s.shift));
                    acc = acc * (pos - negw).scaled(rf_q_minus_qinv().inv());
                    break;
                }
            }
        }
        out = out + acc;
    }
    return out;
}

/// Anti-homomorphic antipode on xi-free words:
///   S(q^C) = q^{-C},  S(e_{alpha_i}) = -q^{h_{alpha_i}} e_{alpha_i},
///   S(e_{-alpha_i}) = -e_{-alpha_i} q^{-h_{alpha_i}}.
inline GenWord antipode_image(const GenWord& x) {
    const int n = x.rank();
    const GenWord expanded = expand_composites(x);
    GenWord out(n);
    for (const auto& t : expanded.terms()) {
        GenWord acc = GenWord::one(n).scaled(t.coeff);
        // anti-homomorphism: reverse the symbol order
        for (auto it = t.syms.rbegin(); it != t.syms.rend(); ++it) {
            const GenSymbol& s = *it;
            switch (s.kind) {
                case GenSymbol::Kind::CartanExp: {
                    std::vector<int> neg = s.cartan;
                    for (auto& v : neg) v = -v;
                    acc = acc * GenWord::symbol(n, GenSymbol::cartan_exp(std::move(neg)));
                    break;
                }
                case GenSymbol::Kind::Root: {
                    if (s.j == s.i + 1) {
                        acc = acc * GenWord::cartan_h(n, s.i, 1).scaled(-rf_one()) *
                              GenWord::symbol(n, s);
                    } else if (s.i == s.j + 1) {
                        acc = acc * GenWord::symbol(n, s).scaled(-rf_one()) *
                              GenWord::cartan_h(n, s.j, -1);
                    } else {
                        throw std::logic_error("composite root survived expansion");
                    }
                    break;
                }
                case GenSymbol::Kind::CartanBracket:
                    throw std::logic_error("cartan bracket survived expansion");
                case GenSymbol::Kind::Xi:
                    throw XiNotAllowed("antipode of xi lives in the drinfeld layer");
            }
        }
        out = out + acc;
    }
    return out;
}

/// Counit: 1 on Cartan exponentials, 0 on root vectors and xi, [shift]_q on
/// Cartan brackets.
inline RatFunc counit(const GenWord& x) {
    RatFunc val = rf_zero();
    for (const auto& t : x.terms()) {
        RatFunc f = t.coeff;
        for (const auto& s : t.syms) {
            if (f.is_zero()) break;
            switch (s.kind) {
                case GenSymbol::Kind::CartanExp: break;
                case GenSymbol::Kind::CartanBracket: f *= qnum_rf(s.shift); break;
                case GenSymbol::Kind::Root:
                case GenSymbol::Kind::Xi: f = rf_zero(); break;
            }
        }
        val += f;
    }
    return val;
}

/// One tensor leg pair of a coproduct expansion.
struct CoprodTerm {
    GenWord left;
    GenWord right;
};

/// Symbolic two-fold coproduct. Composites and brackets are expanded first;
/// xi is not allowed here (its coproduct is the affine formula in the
/// drinfeld layer).
inline std::vector<CoprodTerm> coproduct2(const GenWord& x) {
    const int n = x.rank();
    const GenWord expanded = expand_composites(x);
    std::vector<CoprodTerm> out;
    for (const auto& t : expanded.terms()) {
        std::vector<CoprodTerm> acc{{GenWord::one(n).scaled(t.coeff), GenWord::one(n)}};
        for (const auto& s : t.syms) {
            std::vector<CoprodTerm> delta;
            switch (s.kind) {
                case GenSymbol::Kind::CartanExp:
                    delta.push_back({GenWord::symbol(n, s), GenWord::symbol(n, s)});
                    break;
                case GenSymbol::Kind::Root: {
                    if (s.j == s.i + 1) {
                        // Delta(e_a) = e_a x 1 + q^{-h_a} x e_a
                        delta.push_back({GenWord::symbol(n, s), GenWord::one(n)});
                        delta.push_back({GenWord::cartan_h(n, s.i, -1), GenWord::symbol(n, s)});
                    } else if (s.i == s.j + 1) {
                        // Delta(e_{-a}) = e_{-a} x q^{h_a} + 1 x e_{-a}
                        delta.push_back({GenWord::symbol(n, s), GenWord::cartan_h(n, s.j, 1)});
                        delta.push_back({GenWord::one(n), GenWord::symbol(n, s)});
                    } else {
                        throw std::logic_error("composite root survived expansion");
                    }
                    break;
                }
                case GenSymbol::Kind::CartanBracket:
                    throw std::logic_error("cartan bracket survived expansion");
                case GenSymbol::Kind::Xi:
                    throw XiNotAllowed("coproduct of xi lives in the drinfeld layer");
            }
            std::vector<CoprodTerm> next;
            next.reserve(acc.size() * delta.size());
            for (const auto& p : acc)
                for (const auto& d : delta)
                    next.push_back({p.left * d.left, p.right * d.right});
            acc = std::move(next);
        }
        out.insert(out.end(), acc.begin(), acc.end());
    }
    return out;
}

}  // namespace heckeforge
