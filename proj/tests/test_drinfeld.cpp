#include <catch2/catch_amalgamated.hpp>

#include "heckeforge/verify_quantum.hpp"

using namespace heckeforge;

namespace {

const Bindings kEta0{{}, Rational(0), {}, {}};
const Bindings kQ1{Rational(1), {}, {}, {}};

Matrix antipode_pairing_sum(const DrinfeldianRep& rep, bool s_left) {
    const int n = rep.rank();
    const XiExpansion exp = xi_coproduct(n, 2);
    const GenWord s_xi = xi_antipode(n);
    Matrix sum(rep.dim(), rep.dim());
    for (const auto& s : exp.summands) {
        Matrix left, right;
        if (s.xi_slot && *s.xi_slot == 1) {
            left = s_left ? eval_genword(s_xi, rep.uq, rep.xi) : rep.xi;
            right = s_left ? eval_genword(s.legs[1], rep.uq)
                           : eval_genword(antipode_image(s.legs[1]), rep.uq);
        } else if (s.xi_slot && *s.xi_slot == 2) {
            left = s_left ? eval_genword(antipode_image(s.legs[0]), rep.uq)
                          : eval_genword(s.legs[0], rep.uq);
            right = s_left ? rep.xi : eval_genword(s_xi, rep.uq, rep.xi);
        } else {
            left = s_left ? eval_genword(antipode_image(s.legs[0]), rep.uq)
                          : eval_genword(s.legs[0], rep.uq);
            right = s_left ? eval_genword(s.legs[1], rep.uq)
                           : eval_genword(antipode_image(s.legs[1]), rep.uq);
        }
        sum = sum + (left * right).scaled(s.coeff);
    }
    return sum;
}

}  // namespace

TEST_CASE("evaluation representation") {
    SECTION("xi image is u q at the bottom-left corner, n = 2") {
        const DrinfeldianRep rep = eval_rep(2);
        REQUIRE(rep.xi.at(2, 0) == RatFunc::variable(Var::u) * RatFunc::q_power(1));
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                if (!(r == 2 && c == 0)) REQUIRE(rep.xi.at(r, c).is_zero());
    }
    SECTION("u = 0 gives the zero image") {
        REQUIRE(eval_rep(2, rf_zero()).xi.is_zero());
    }
    SECTION("the xi image carries no eta") {
        const DrinfeldianRep rep = eval_rep(2);
        REQUIRE(rep.xi.specialize(kEta0) == rep.xi);
    }
    SECTION("n = 1 is rejected") { REQUIRE_THROWS_AS(eval_rep(1), RankTooSmall); }
}

TEST_CASE("xi coproduct structure") {
    SECTION("l = 1 is the identity expansion") {
        const XiExpansion e = xi_coproduct(2, 1);
        REQUIRE(e.summands.size() == 1);
        REQUIRE(e.summands[0].xi_slot == 1);
        REQUIRE(e.summands[0].coeff == rf_one());
    }
    SECTION("l = 2 term counts: 2 xi summands and n+1 eta summands") {
        for (int n = 2; n <= 3; ++n) {
            const XiExpansion e = xi_coproduct(n, 2);
            int with = 0, without = 0;
            for (const auto& s : e.summands) {
                (s.xi_slot ? with : without)++;
                if (!s.xi_slot) {
                    // every correction term carries an explicit eta factor
                    REQUIRE(s.coeff.specialize(kEta0).is_zero());
                }
            }
            REQUIRE(with == 2);
            REQUIRE(without == n + 1);
        }
    }
    SECTION("coassociativity at l = 3 (exact matrix images)") {
        const std::vector<RatFunc> params{RatFunc::variable(Var::u), RatFunc::variable(Var::a),
                                          RatFunc::from_int(7)};
        const Matrix a = xi_expansion_matrix(xi_coproduct_nested(2, 3, true), params);
        const Matrix b = xi_expansion_matrix(xi_coproduct_nested(2, 3, false), params);
        REQUIRE(a == b);
    }
}

TEST_CASE("xi antipode") {
    SECTION("chain terms for n = 2: a single two-step path") {
        const GenWord s = xi_antipode(2);
        // -q^{...} xi, the bracket term, and one chain term
        REQUIRE(s.terms().size() == 3);
    }
    SECTION("chain terms for n = 3: 2^{n-1} - 1 = 3 chains") {
        REQUIRE(xi_antipode(3).terms().size() == 5);
    }
    SECTION("at eta = 0 only the leading term survives") {
        const DrinfeldianRep rep = eval_rep(2);
        const Matrix s = eval_genword(xi_antipode(2), rep.uq, rep.xi).specialize(kEta0);
        std::vector<int> c{-1, 0, 1};
        const Matrix lead =
            (eval_genword(GenWord::symbol(2, GenSymbol::cartan_exp(c)), rep.uq) * rep.xi)
                .scaled(-rf_one())
                .specialize(kEta0);
        REQUIRE(s == lead);
    }
    SECTION("antipode axioms pair to zero against the coproduct") {
        for (int n = 2; n <= 3; ++n) {
            const DrinfeldianRep rep = eval_rep(n);
            REQUIRE(antipode_pairing_sum(rep, true).is_zero());
            REQUIRE(antipode_pairing_sum(rep, false).is_zero());
        }
    }
}

TEST_CASE("verify_drinfeldian") {
    SECTION("passes on the evaluation representation, n = 2 and 3") {
        for (int n = 2; n <= 3; ++n) {
            const VerificationReport rep = verify_drinfeldian(eval_rep(n));
            INFO("n = " << n);
            REQUIRE(rep.all_pass());
            REQUIRE(rep.entries.size() == 10);  // DY19..DY28
            for (const auto& e : rep.entries) {
                if (e.relation.rfind("DY27", 0) == 0 || e.relation.rfind("DY28", 0) == 0)
                    REQUIRE(e.detail.at("sides_vanish_independently") == true);
            }
        }
    }
    SECTION("the u = 1 substitution xi -> q^{e11+enn} e_{n+1,1} also satisfies them") {
        const VerificationReport rep = verify_drinfeldian(eval_rep(2, rf_one()));
        REQUIRE(rep.all_pass());
    }
    SECTION("detects a Cartan exponent corruption") {
        DrinfeldianRep rep = eval_rep(2);
        std::swap(rep.uq.qe_pos[0], rep.uq.qe_neg[0]);  // q^{e_11} -> q^{-e_11}
        const VerificationReport r = verify_drinfeldian(rep);
        REQUIRE_FALSE(r.all_pass());
        bool dy20 = false;
        for (const auto& e : r.entries)
            if (!e.pass && e.relation.rfind("DY20", 0) == 0) dy20 = true;
        REQUIRE(dy20);
    }
    SECTION("detects a misplaced xi image") {
        DrinfeldianRep rep = eval_rep(2);
        Matrix bad(3, 3);
        bad.at(1, 0) = rep.xi.at(2, 0);  // row shifted: E_{31} -> E_{21}
        rep.xi = bad;
        const VerificationReport r = verify_drinfeldian(rep);
        REQUIRE_FALSE(r.all_pass());
    }
}

TEST_CASE("verify_yangian") {
    SECTION("passes at q = 1 for the evaluation representation") {
        for (int n = 2; n <= 3; ++n) {
            const VerificationReport rep = verify_yangian(eval_rep(n));
            INFO("n = " << n);
            REQUIRE(rep.all_pass());
            REQUIRE(rep.entries.size() == 12);  // DY34..DY43 + DY44 + DY45
        }
    }
    SECTION("detects a doubled Cartan exponent") {
        DrinfeldianRep rep = eval_rep(2);
        rep.uq.qe_pos[2] = rep.uq.qe_pos[2] * rep.uq.qe_pos[2];  // q^{2 e_33}
        rep.uq.qe_neg[2] = rep.uq.qe_neg[2] * rep.uq.qe_neg[2];
        const VerificationReport r = verify_yangian(rep);
        REQUIRE_FALSE(r.all_pass());
        bool dy36 = false;
        for (const auto& e : r.entries)
            if (!e.pass && e.relation.rfind("DY36", 0) == 0) dy36 = true;
        REQUIRE(dy36);
    }
}

TEST_CASE("current-algebra limit at eta = 0") {
    for (int n = 2; n <= 3; ++n) {
        const VerificationReport rep = verify_current_limit(n);
        INFO("n = " << n);
        REQUIRE(rep.all_pass());
    }
    SECTION("detects an eta-term that fails to vanish") {
        XiExpansion bad = xi_coproduct(2, 2);
        for (auto& s : bad.summands)
            if (!s.xi_slot) {
                s.coeff = rf_one();  // drop the eta factor on one term
                break;
            }
        const VerificationReport r = verify_current_limit_with(2, bad);
        REQUIRE_FALSE(r.all_pass());
        bool collapse = false;
        for (const auto& e : r.entries)
            if (!e.pass && e.relation == "DY29.eta0-two-summands") collapse = true;
        REQUIRE(collapse);
    }
}

TEST_CASE("the limit square commutes") {
    const VerificationReport rep = verify_limit_square(2);
    REQUIRE(rep.all_pass());
    // the path-equality entry must be present and cover xi and Delta(xi)
    bool found = false;
    for (const auto& e : rep.entries)
        if (e.relation == "square.path-equality") found = e.pass;
    REQUIRE(found);
}
