#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "heckeforge/aha.hpp"
#include "heckeforge/heckemodule.hpp"
#include "heckeforge/json_io.hpp"
#include "heckeforge/report.hpp"

namespace heckeforge {

enum class AhaMode { modified, classical_z, degenerate_q1, symmetric_q1_eta0 };

inline const char* to_string(AhaMode m) {
    switch (m) {
        case AhaMode::modified: return "modified";
        case AhaMode::classical_z: return "classical_z";
        case AhaMode::degenerate_q1: return "degenerate_q1";
        case AhaMode::symmetric_q1_eta0: return "symmetric_q1_eta0";
    }
    return "?";
}

inline AhaMode aha_mode_from_string(const std::string& s) {
    if (s == "modified") return AhaMode::modified;
    if (s == "classical_z") return AhaMode::classical_z;
    if (s == "degenerate_q1") return AhaMode::degenerate_q1;
    if (s == "symmetric_q1_eta0") return AhaMode::symmetric_q1_eta0;
    throw ParseError("unknown hecke mode: " + s);
}

inline AhaContext context_for_mode(AhaMode mode, int l) {
    switch (mode) {
        case AhaMode::modified:
        case AhaMode::classical_z: return AhaContext::modified(l);
        case AhaMode::degenerate_q1: return AhaContext::degenerate_q1(l);
        case AhaMode::symmetric_q1_eta0: return AhaContext::symmetric_q1_eta0(l);
    }
    throw ParseError("unknown hecke mode");
}

namespace detail {

inline void check_zero(VerificationReport& rep, const std::string& id, const AhaElement& diff,
                       json where = nullptr) {
    if (diff.is_zero()) {
        rep.add_pass(id);
    } else {
        json w{{"difference", to_json(diff)}};
        if (!where.is_null()) w["at"] = where;
        rep.add(id, false, std::move(w));
    }
}

/// Aggregates one relation family over index tuples: collects every failing
/// instance into a single entry.
class FamilyCheck {
  public:
    FamilyCheck(VerificationReport& rep, std::string id) : rep_(rep), id_(std::move(id)) {}

    void instance(const AhaElement& diff, json where) {
        ++count_;
        if (!diff.is_zero()) failures_.push_back(json{{"at", std::move(where)},
                                                      {"difference", to_json(diff)}});
    }

    void instance_matrix(const Matrix& diff, json where) {
        ++count_;
        if (!diff.is_zero()) failures_.push_back(json{{"at", std::move(where)},
                                                      {"difference", rows_to_json(diff)}});
    }

    ~FamilyCheck() {
        if (failures_.empty())
            rep_.add(id_, true, nullptr, json{{"instances", count_}});
        else
            rep_.add(id_, false, json(failures_), json{{"instances", count_}});
    }

  private:
    VerificationReport& rep_;
    std::string id_;
    json failures_ = json::array();
    std::size_t count_ = 0;
};

inline NormalMonomial random_monomial(int l, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> upow(0, 2);
    std::vector<int> up(static_cast<std::size_t>(l));
    for (auto& v : up) v = upow(rng);
    std::vector<int> images(static_cast<std::size_t>(l));
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    return NormalMonomial(std::move(up), Permutation::from_images(images));
}

}  // namespace detail

/// Relation verification against an explicit rule context. The public
/// verify_aha wraps this with the honest context of each mode; feeding a
/// corrupted context exercises the detector paths.
inline VerificationReport verify_aha_with_context(int l, AhaMode mode, const AhaContext& ctx,
                                                  unsigned long long seed = 1729,
                                                  int assoc_triples = 100) {
    VerificationReport rep;
    rep.subject = "verify-hecke";
    rep.params = json{{"l", l}, {"mode", to_string(mode)}, {"seed", seed},
                      {"assoc_triples", assoc_triples}};
    const bool classical = mode == AhaMode::classical_z;
    const AhaElement one = AhaElement::one(l);

    auto sig = [&](int i) { return AhaElement::sigma(l, i); };
    auto sig_inv = [&](int i) { return sigma_inverse(l, i, ctx); };
    // affine letters: u_j, or the z_j = u_j - eta/(q-q^{-1}) presentation
    auto aff = [&](int j) {
        AhaElement u = AhaElement::u_gen(l, j);
        return classical ? u_from_z(u, ctx) : u;
    };

    {
        detail::FamilyCheck fam(rep, classical ? "AH1-2.quadratic" : "AH17-18.quadratic");
        for (int i = 1; i < l; ++i) {
            fam.instance(aha_mul(sig(i), sig(i), ctx) - sig(i).scaled(ctx.quad) - one,
                         json{{"i", i}});
            fam.instance(aha_mul(sig(i), sig_inv(i), ctx) - one, json{{"i", i}, {"side", "right"}});
            fam.instance(aha_mul(sig_inv(i), sig(i), ctx) - one, json{{"i", i}, {"side", "left"}});
        }
    }
    {
        detail::FamilyCheck fam(rep, classical ? "AH3.braid" : "AH19.braid");
        for (int i = 1; i + 1 < l; ++i)
            fam.instance(aha_mul(aha_mul(sig(i), sig(i + 1), ctx), sig(i), ctx) -
                             aha_mul(aha_mul(sig(i + 1), sig(i), ctx), sig(i + 1), ctx),
                         json{{"i", i}});
    }
    {
        detail::FamilyCheck fam(rep, classical ? "AH4.distant" : "AH20.distant");
        for (int i = 1; i < l; ++i)
            for (int j = i + 2; j < l; ++j)
                fam.instance(aha_mul(sig(i), sig(j), ctx) - aha_mul(sig(j), sig(i), ctx),
                             json{{"i", i}, {"j", j}});
    }
    {
        detail::FamilyCheck fam(rep, classical ? "AH6.z-commute" : "AH21.u-commute");
        for (int j = 1; j <= l; ++j)
            for (int k = j + 1; k <= l; ++k)
                fam.instance(aha_mul(aff(j), aff(k), ctx) - aha_mul(aff(k), aff(j), ctx),
                             json{{"j", j}, {"k", k}});
    }
    {
        detail::FamilyCheck fam(rep, classical ? "AH7.sigma-z-distant" : "AH22.sigma-u-distant");
        for (int i = 1; i < l; ++i)
            for (int j = 1; j <= l; ++j) {
                if (j == i || j == i + 1) continue;
                fam.instance(aha_mul(sig(i), aff(j), ctx) - aha_mul(aff(j), sig(i), ctx),
                             json{{"i", i}, {"j", j}});
            }
    }
    {
        // cross relation sigma_i a_i = a_{i+1} sigma_i^{-1} (+ eta in the
        // u presentation), plus both rearranged forms; this pins the mutual
        // consistency of the quadratic and cross rules.
        detail::FamilyCheck fam(rep, classical ? "AH8.cross" : "AH23-24.cross");
        const RatFunc c = classical ? rf_zero() : ctx.cross_c;
        for (int i = 1; i < l; ++i) {
            const AhaElement lhs = aha_mul(sig(i), aff(i), ctx);
            const AhaElement rhs = aha_mul(aff(i + 1), sig_inv(i), ctx) + one.scaled(c);
            fam.instance(lhs - rhs, json{{"i", i}, {"form", "AH23"}});
            // sigma_i a_i - a_{i+1} sigma_i = -quad a_{i+1} + c
            fam.instance(aha_mul(sig(i), aff(i), ctx) - aha_mul(aff(i + 1), sig(i), ctx) +
                             aff(i + 1).scaled(ctx.quad) - one.scaled(c),
                         json{{"i", i}, {"form", "AH24a"}});
            // a_i sigma_i - sigma_i a_{i+1} = -quad a_{i+1} + c
            fam.instance(aha_mul(aff(i), sig(i), ctx) - aha_mul(sig(i), aff(i + 1), ctx) +
                             aff(i + 1).scaled(ctx.quad) - one.scaled(c),
                         json{{"i", i}, {"form", "AH24b"}});
        }
    }
    {
        // associativity sampling: confluence evidence for the rewriting
        // system. Fixed corner triples first, then seeded random monomials.
        detail::FamilyCheck fam(rep, "assoc-sampling");
        std::vector<std::array<AhaElement, 3>> triples;
        for (int i = 1; i < l; ++i)
            for (int j = 1; j <= l; ++j) {
                triples.push_back({sig(i), sig(i), AhaElement::u_gen(l, j)});
                triples.push_back({sig(i), AhaElement::u_gen(l, j), sig(i)});
            }
        std::mt19937_64 rng(seed);
        while (static_cast<int>(triples.size()) < assoc_triples) {
            triples.push_back({AhaElement::from_monomial(detail::random_monomial(l, rng), rf_one()),
                               AhaElement::from_monomial(detail::random_monomial(l, rng), rf_one()),
                               AhaElement::from_monomial(detail::random_monomial(l, rng), rf_one())});
        }
        int idx = 0;
        for (const auto& t : triples) {
            fam.instance(aha_mul(aha_mul(t[0], t[1], ctx), t[2], ctx) -
                             aha_mul(t[0], aha_mul(t[1], t[2], ctx), ctx),
                         json{{"triple", idx++}});
        }
    }
    return rep;
}

/// Relation verification of the (modified) affine Hecke algebra in the
/// chosen presentation or specialization.
inline VerificationReport verify_aha(int l, AhaMode mode, unsigned long long seed = 1729,
                                     int assoc_triples = 100) {
    if (l < 2) throw IndexOutOfRange("verify_aha needs l >= 2");
    return verify_aha_with_context(l, mode, context_for_mode(mode, l), seed, assoc_triples);
}

/// Checks a Hecke module's matrices against the defining relations. The
/// matrices represent a right action on coordinate columns, so words
/// reverse: R(x y) = R(y) R(x).
inline VerificationReport validate_module(const HeckeModule& m) {
    VerificationReport rep;
    rep.subject = "validate-module";
    rep.params = json{{"l", m.l}, {"dim", m.dim}};
    const Matrix id = Matrix::identity(m.dim);
    const RatFunc quad = rf_q_minus_qinv();

    {
        detail::FamilyCheck fam(rep, "AH17-18.quadratic");
        for (int i = 1; i < m.l; ++i) {
            const Matrix& s = m.sigma_mat(i);
            fam.instance_matrix(s * s - s.scaled(quad) - id, json{{"i", i}});
        }
    }
    {
        detail::FamilyCheck fam(rep, "AH19.braid");
        for (int i = 1; i + 1 < m.l; ++i) {
            const Matrix &a = m.sigma_mat(i), &b = m.sigma_mat(i + 1);
            fam.instance_matrix(a * b * a - b * a * b, json{{"i", i}});
        }
    }
    {
        detail::FamilyCheck fam(rep, "AH20.distant");
        for (int i = 1; i < m.l; ++i)
            for (int j = i + 2; j < m.l; ++j)
                fam.instance_matrix(commutator(m.sigma_mat(i), m.sigma_mat(j)),
                                    json{{"i", i}, {"j", j}});
    }
    {
        detail::FamilyCheck fam(rep, "AH21.u-commute");
        for (int j = 1; j <= m.l; ++j)
            for (int k = j + 1; k <= m.l; ++k)
                fam.instance_matrix(commutator(m.u_mat(j), m.u_mat(k)), json{{"j", j}, {"k", k}});
    }
    {
        detail::FamilyCheck fam(rep, "AH22.sigma-u-distant");
        for (int i = 1; i < m.l; ++i)
            for (int j = 1; j <= m.l; ++j) {
                if (j == i || j == i + 1) continue;
                fam.instance_matrix(commutator(m.sigma_mat(i), m.u_mat(j)),
                                    json{{"i", i}, {"j", j}});
            }
    }
    {
        // sigma_i u_i = u_{i+1} sigma_i^{-1} + eta, reversed for the right
        // action: R(u_i) R(sigma_i) = R(sigma_i^{-1}) R(u_{i+1}) + eta.
        detail::FamilyCheck fam(rep, "AH23.cross");
        for (int i = 1; i < m.l; ++i) {
            const Matrix lhs = m.u_mat(i) * m.sigma_mat(i);
            const Matrix rhs =
                m.sigma_inv_mat(i) * m.u_mat(i + 1) + Matrix::scalar(m.dim, rf_eta());
            fam.instance_matrix(lhs - rhs, json{{"i", i}});
        }
    }
    return rep;
}

}  // namespace heckeforge
