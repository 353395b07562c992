/*
   Copyright 2026 The qweyl Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "qweyl/scalars.hpp"
#include "qweyl/testing.hpp"

namespace qweyl {
namespace {

TEST(Rational, NormalizesAndPromotes) {
    EXPECT_EQ(Rational(6, -4).str(), "-3/2");
    EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
    const Rational big = Rational(1L << 40).pow(3) + Rational(1, 3);
    EXPECT_FALSE(big.is_small());
    EXPECT_EQ((big - Rational(1, 3)) / Rational(1L << 40).pow(2), Rational(1L << 40));
    EXPECT_TRUE((big - big).is_zero());
    EXPECT_EQ(Rational(7, 3).inverse(), Rational(3, 7));
    EXPECT_THROW(Rational().inverse(), error);
}

TEST(Rational, ExactRoot) {
    Rational r;
    EXPECT_TRUE(Rational(27, 8).exact_root(3, r));
    EXPECT_EQ(r, Rational(3, 2));
    EXPECT_TRUE(Rational(-32).exact_root(5, r));
    EXPECT_EQ(r, Rational(-2));
    EXPECT_FALSE(Rational(2).exact_root(2, r));
    EXPECT_FALSE(Rational(-4).exact_root(2, r));
}

TEST(Laurent, ArithmeticAndText) {
    const auto t = RationalLaurent::t();
    const auto p = RationalLaurent(Rational(1)) + t;
    EXPECT_EQ((p * p).str(), "1 + 2*t + t^2");
    EXPECT_EQ((t.pow(3) * RationalLaurent::t(-5)).str(), "t^-2");
    EXPECT_EQ((p - p).str(), "0");
    EXPECT_EQ(RationalLaurent::from_coeffs(-1, {Rational(0), Rational(-2), Rational(0)}).str(), "-2");
}

TEST(QuantumIntegers, ValuesAtOne) {
    EXPECT_EQ(qint(4).str(), "1 + t + t^2 + t^3");
    EXPECT_EQ(qfact(3).str(), "1 + 2*t + 2*t^2 + t^3");
    // [m]_1 = m and [m]_1! = m!
    EXPECT_EQ(qint(7).evaluate(Rational(1)), Rational(7));
    EXPECT_EQ(qfact(5).evaluate(Rational(1)), Rational(120));
}

TEST(QuantumIntegers, TelescopingIdentity) {
    const RationalLaurent one_minus_t = RationalLaurent(Rational(1)) - RationalLaurent::t();
    for (unsigned long m = 0; m <= 64; ++m)
        EXPECT_EQ(qint(m) * one_minus_t, RationalLaurent(Rational(1)) - RationalLaurent::t(static_cast<long>(m)));
    EXPECT_EQ(qfact(0), RationalLaurent(Rational(1)));
    EXPECT_EQ(qfact(2).str(), "1 + t");
}

TEST(QuantumIntegers, FactorialVanishesFromLevelOn) {
    for (int l = 2; l <= 9; ++l) {
        for (unsigned long k = 1; k < static_cast<unsigned long>(l); ++k) EXPECT_FALSE(specialize(qfact(k), l).is_zero());
        for (unsigned long k = static_cast<unsigned long>(l); k <= static_cast<unsigned long>(l) + 2; ++k)
            EXPECT_TRUE(specialize(qfact(k), l).is_zero());
    }
}

TEST(Specialize, SpecExamples) {
    EXPECT_EQ(specialize(RationalLaurent::t(2), 2), Cyclo(Rational(1)));
    EXPECT_EQ(specialize(RationalLaurent(Rational(1)) - RationalLaurent::t(), 2), Cyclo(Rational(2)));
}

TEST(Embed, SpecExamples) {
    const auto f4 = CycloField::make(4), f3 = CycloField::make(3);
    EXPECT_EQ(embed(Cyclo(f4, Rational(1))), std::complex<double>(1.0, 0.0));
    EXPECT_LT(std::abs(embed(Cyclo::zeta(f4)) - std::complex<double>(0.0, 1.0)), 1e-12);
    EXPECT_LT(std::abs(embed(Cyclo::zeta(f3) + Cyclo::root_power(f3, 2)) - std::complex<double>(-1.0, 0.0)), 1e-12);
}

TEST(ExactDivision, SpecExamples) {
    const auto f2 = CycloField::make(2);
    const auto p = RationalLaurent::t(2) - RationalLaurent(Rational(1));
    EXPECT_EQ(exact_div(p, Cyclo(f2, Rational(-1))).str(), "-1 + t");
    for (int l = 2; l <= 9; ++l) {
        const auto f = CycloField::make(l);
        const auto h = exact_div(qint(static_cast<unsigned long>(l)), Cyclo::zeta(f));
        EXPECT_FALSE(specialize(h, f).is_zero());
    }
    EXPECT_TRUE(exact_div(CycloLaurent(), Cyclo::zeta(f2)).is_zero());
}

TEST(Cyclo, MinimalPolynomialRelations) {
    for (int l = 2; l <= 12; ++l) {
        const auto f = CycloField::make(l);
        const Cyclo z = Cyclo::zeta(f);
        EXPECT_EQ(z.pow(l), Cyclo(f, Rational(1))) << l;
        for (int k = 1; k < l; ++k) EXPECT_FALSE(z.pow(k) == Cyclo(f, Rational(1))) << l << " " << k;
        // degree is Euler's phi
        int phi = 0;
        for (int k = 1; k <= l; ++k) phi += std::gcd(k, l) == 1;
        EXPECT_EQ(f->degree(), phi);
    }
    const auto f3 = CycloField::make(3);
    const Cyclo q = Cyclo::zeta(f3);
    EXPECT_EQ(q * q + q + Cyclo(f3, Rational(1)), Cyclo(f3, Rational()));
    EXPECT_EQ((Cyclo(f3, Rational(1)) - q).pow(3).str(), "-3 - 6*q");
}

TEST(Cyclo, InverseAndEmbedding) {
    testing::Rng g(11);
    for (int l : {3, 5, 7, 8, 12}) {
        const auto f = CycloField::make(l);
        for (int it = 0; it < 10; ++it) {
            const Cyclo a = testing::random_cyclo(g, f), b = testing::random_cyclo(g, f);
            EXPECT_EQ(a * a.inverse(), Cyclo(f, Rational(1)));
            const auto sum = (a + b).embed(), prod = (a * b).embed();
            EXPECT_LT(std::abs(sum - (a.embed() + b.embed())), 1e-10);
            EXPECT_LT(std::abs(prod - a.embed() * b.embed()), 1e-10 * std::max(1.0, std::abs(prod)));
        }
    }
}

TEST(Cyclo, EmbeddingOfLargeHeight) {
    testing::Rng g(12);
    const auto f = CycloField::make(7);
    for (int it = 0; it < 20; ++it) {
        std::vector<Rational> ca(6), cb(6);
        for (auto& v : ca) v = Rational(testing::uniform(g, -1000000, 1000000));
        for (auto& v : cb) v = Rational(testing::uniform(g, -1000000, 1000000));
        const auto a = Cyclo::from_coeffs(f, ca), b = Cyclo::from_coeffs(f, cb);
        EXPECT_LE(std::abs((a + b).embed() - (a.embed() + b.embed())), 1e-10 * 1e6);
    }
}

TEST(Specialize, RingHomomorphism) {
    testing::Rng g(13);
    for (int l : {2, 3, 5, 6}) {
        const auto f = CycloField::make(l);
        for (int it = 0; it < 20; ++it) {
            const auto p = testing::random_laurent(g), q = testing::random_laurent(g);
            EXPECT_EQ(specialize(p * q, f), specialize(p, f) * specialize(q, f));
            EXPECT_EQ(specialize(p + q, f), specialize(p, f) + specialize(q, f));
        }
    }
    // [l]_q = 0 at a primitive l-th root
    for (int l = 2; l <= 10; ++l) EXPECT_TRUE(specialize(qint(static_cast<unsigned long>(l)), l).is_zero());
}

TEST(ExactDivision, QuotientAgreesWithDerivative) {
    // For p with p(zeta) = 0, (p / (t - zeta))(zeta) = p'(zeta).
    testing::Rng g(14);
    for (int l : {3, 5, 7}) {
        const auto f = CycloField::make(l);
        const Cyclo z = Cyclo::zeta(f);
        for (int it = 0; it < 10; ++it) {
            const auto r = lift_coefficients(testing::random_laurent(g), f);
            const auto p = r * CycloLaurent::from_coeffs(0, {-z, Cyclo(f, Rational(1))});
            const auto quotient = exact_div(p, z);
            EXPECT_EQ(quotient, r);
            Cyclo deriv(f, Rational());
            for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
                const long e = p.low_degree() + static_cast<long>(k);
                deriv += p.coeffs()[k] * Cyclo(f, Rational(e)) * Cyclo::root_power(f, e - 1);
            }
            EXPECT_EQ(quotient_at_root(p, f), deriv);
            EXPECT_EQ(specialize(quotient, f), deriv);
        }
    }
}

TEST(ExactDivision, NonzeroRemainderThrows) {
    const auto f = CycloField::make(5);
    const auto p = lift_coefficients(qint(3), f);
    EXPECT_THROW(exact_div(p, Cyclo::zeta(f)), division_failure);
    EXPECT_THROW(quotient_at_root(p, f), division_failure);
    EXPECT_NO_THROW(exact_div(qint(5), Cyclo::zeta(f)));
}

TEST(Rings, NamedScalarsAndInverses) {
    EXPECT_EQ(SymbolicRing{}.named_scalar("t")->str(), "t");
    EXPECT_FALSE(SymbolicRing{}.named_scalar("q"));
    EXPECT_FALSE(SymbolicRing{}.invert_scalar(qint(2)));
    EXPECT_EQ(SymbolicRing{}.invert_scalar(RationalLaurent::monomial(Rational(2), 3))->str(), "1/2*t^-3");
    const CycloRing cr(4);
    EXPECT_EQ(cr.param_power(2), Cyclo(cr.field, Rational(-1)));
    EXPECT_EQ(ring_qint(cr, 4), Cyclo(cr.field, Rational()));
    const NumericRing nr(std::complex<double>(0.0, 1.0));
    EXPECT_TRUE(nr.accepts_float());
    EXPECT_LT(std::abs(ring_qint(nr, 4)), 1e-15);
}

}  // namespace
}  // namespace qweyl
