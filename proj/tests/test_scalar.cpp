#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "heckeforge/ratfunc.hpp"

using namespace heckeforge;

namespace {

RatFunc qp(int k) { return RatFunc::q_power(k); }

/// Random small rational function: a Laurent polynomial numerator over a
/// monomial-or-binomial denominator. Dense enough to exercise normalization.
RatFunc random_ratfunc(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> qe(-3, 3);
    std::uniform_int_distribution<int> pe(0, 2);
    auto poly = [&](int terms) {
        LaurentPoly p;
        for (int t = 0; t < terms; ++t) {
            int c = coef(rng);
            if (c == 0) c = 1;
            p.add_term(Exponents{qe(rng), pe(rng), pe(rng), pe(rng)}, Rational(c));
        }
        return p;
    };
    LaurentPoly num = poly(3);
    LaurentPoly den = poly(2);
    if (den.is_zero()) den = LaurentPoly::constant(Rational(1));
    if (num.is_zero()) return RatFunc::zero();
    return RatFunc(num, den);
}

}  // namespace

TEST_CASE("arithmetic identities") {
    const RatFunc qmq = qp(1) - qp(-1);

    SECTION("additive identity") { REQUIRE(qmq + RatFunc::zero() == qmq); }
    SECTION("field inverse") { REQUIRE(qmq.inv() * qmq == rf_one()); }
    SECTION("exact quotient (q^2 - q^-2) / (q - q^-1) = q + q^-1") {
        const RatFunc lhs = (qp(2) - qp(-2)) / qmq;
        REQUIRE(lhs == qp(1) + qp(-1));
        // cross-multiplied form of the same fact
        REQUIRE((qp(1) + qp(-1)) * qmq == qp(2) - qp(-2));
    }
    SECTION("division by zero throws") {
        REQUIRE_THROWS_AS(qmq / RatFunc::zero(), DivisionByZero);
        REQUIRE_THROWS_AS(RatFunc::zero().inv(), DivisionByZero);
    }
}

TEST_CASE("zero test and equality by cross-multiplication") {
    const RatFunc qmq = qp(1) - qp(-1);
    REQUIRE(RatFunc::zero().is_zero());
    REQUIRE(qmq / qmq == rf_one());
    const RatFunc sing = rf_eta() / qmq;
    REQUIRE_FALSE(sing.is_zero());
    // same value, structurally different representatives
    const RatFunc x = (qp(2) - qp(-2)) / (qp(1) + qp(-1));
    REQUIRE(x == qmq);
}

TEST_CASE("specialization") {
    const RatFunc qmq = qp(1) - qp(-1);
    const RatFunc sing = rf_eta() / qmq;

    SECTION("eta -> 0 kills the singular shift") {
        REQUIRE(sing.specialize(Bindings{{}, Rational(0), {}, {}}).is_zero());
    }
    SECTION("q -> 1 is singular for eta/(q - q^-1)") {
        REQUIRE_THROWS_AS(sing.specialize(Bindings{Rational(1), {}, {}, {}}),
                          SingularSpecialization);
    }
    SECTION("q + q^-1 at q = 2 is 5/2") {
        const RatFunc v = (qp(1) + qp(-1)).specialize(Bindings{Rational(2), {}, {}, {}});
        REQUIRE(v.as_rational() == Rational(5, 2));
    }
    SECTION("binding q to zero is rejected") {
        REQUIRE_THROWS(qmq.specialize(Bindings{Rational(0), {}, {}, {}}));
    }
}

TEST_CASE("q-numbers") {
    REQUIRE(qnum(0).is_zero());
    REQUIRE(RatFunc(qnum(1)) == rf_one());
    REQUIRE(RatFunc(qnum(2)) == qp(1) + qp(-1));
    REQUIRE(RatFunc(qnum(-3)) == -(qp(2) + qp(0) + qp(-2)));
    SECTION("[m] at q=1 equals m for |m| <= 20") {
        for (int m = -20; m <= 20; ++m) {
            const RatFunc v = RatFunc(qnum(m)).specialize(Bindings{Rational(1), {}, {}, {}});
            REQUIRE(v.as_rational() == Rational(m));
        }
    }
    SECTION("[m] (q - q^-1) = q^m - q^-m") {
        for (int m = 1; m <= 6; ++m)
            REQUIRE(RatFunc(qnum(m)) * (qp(1) - qp(-1)) == qp(m) - qp(-m));
    }
}

TEST_CASE("field axioms on sampled triples") {
    std::mt19937_64 rng(20250810);
    for (int t = 0; t < 40; ++t) {
        const RatFunc a = random_ratfunc(rng);
        const RatFunc b = random_ratfunc(rng);
        const RatFunc c = random_ratfunc(rng);
        REQUIRE(((a + b) + c) - (a + (b + c)) == RatFunc::zero());
        REQUIRE(((a * b) * c) - (a * (b * c)) == RatFunc::zero());
        REQUIRE((a * (b + c)) - (a * b + a * c) == RatFunc::zero());
        REQUIRE(a + (-a) == RatFunc::zero());
        if (!a.is_zero()) REQUIRE(a * a.inv() == rf_one());
    }
}

TEST_CASE("cross-multiplication equality is transitive on representatives") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 25; ++t) {
        const RatFunc a = random_ratfunc(rng);
        const RatFunc m1 = random_ratfunc(rng);
        const RatFunc m2 = random_ratfunc(rng);
        if (m1.is_zero() || m2.is_zero()) continue;
        // b and c are a rescaled by nontrivial representatives
        const RatFunc b = (a * m1) / m1;
        const RatFunc c = (a * m2) / m2;
        REQUIRE(a == b);
        REQUIRE(b == c);
        REQUIRE(a == c);
    }
}

TEST_CASE("specialize commutes with arithmetic away from poles") {
    std::mt19937_64 rng(7);
    const Bindings at{Rational(3, 2), Rational(1, 3), Rational(2), Rational(5)};
    int checked = 0;
    for (int t = 0; t < 60 && checked < 25; ++t) {
        const RatFunc a = random_ratfunc(rng);
        const RatFunc b = random_ratfunc(rng);
        try {
            const RatFunc lhs = (a * b).specialize(at);
            const RatFunc rhs = a.specialize(at) * b.specialize(at);
            REQUIRE(lhs == rhs);
            const RatFunc lhs2 = (a + b).specialize(at);
            const RatFunc rhs2 = a.specialize(at) + b.specialize(at);
            REQUIRE(lhs2 == rhs2);
            ++checked;
        } catch (const SingularSpecialization&) {
            // a pole at the sample point; skip
        }
    }
    REQUIRE(checked >= 25);
}
