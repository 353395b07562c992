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

#include "qweyl/expr.hpp"
#include "qweyl/poisson.hpp"
#include "qweyl/testing.hpp"

namespace qweyl {
namespace {

using W = WeylElement<CycloRing>;

TEST(Poisson, LambdaAtTwoIsOne) {
    EXPECT_EQ(poisson_lambda(CycloField::make(2)), Cyclo(Rational(1)));
    for (int l = 2; l <= 12; ++l) EXPECT_FALSE(poisson_lambda(CycloField::make(l)).is_zero());
}

TEST(Poisson, LiftExamples) {
    const PoissonContext ctx(1, 5);
    const auto alg = ctx.algebra();
    const auto a = parse_weyl("x1^5 + (1 - q)*x1*d1", alg);
    const auto la = lift(a, ctx.lift_algebra_ptr());
    EXPECT_EQ(specialize_element(la, alg), a);
    for (const auto& [m, c] : la.terms()) EXPECT_TRUE(c.is_constant());
    EXPECT_TRUE(lift(W::zero(alg), ctx.lift_algebra_ptr()).is_zero());
}

TEST(Poisson, StraightBracket) {
    for (int l = 2; l <= 12; ++l) {
        const PoissonContext ctx(1, l);
        const auto alg = ctx.algebra();
        const auto& field = ctx.field();
        const auto lu = static_cast<unsigned long>(l);
        const auto br = poisson_bracket(power(W::d(alg, 1), lu), power(W::x(alg, 1), lu), ctx);
        const Cyclo q = Cyclo::zeta(field);
        const Cyclo c = Cyclo(field, Rational(l)) * (q - Cyclo(field, Rational(1))) * specialize(qfact(lu - 1), field).inverse();
        Monomial m(1);
        m.alpha(0) = m.beta(0) = static_cast<Monomial::exp_type>(l);
        EXPECT_EQ(br, W::one(alg) + W::term(alg, m, c)) << l;
    }
    const PoissonContext c2(1, 2);
    EXPECT_EQ(print_weyl(poisson_bracket(parse_weyl("d1^2", c2.algebra()), parse_weyl("x1^2", c2.algebra()), c2)),
              "1 - 4*x1^2*d1^2");
}

TEST(Poisson, DividedCommutatorFromScratch) {
    // Independent route for l = 2: general lifts, full commutator over
    // Q(zeta)[t, t^-1], explicit exact_div and specialization.
    const PoissonContext ctx(1, 2);
    const auto& field = ctx.field();
    const auto lp = lift(parse_weyl("d1^2", ctx.algebra()), ctx.lift_algebra_ptr());
    const auto lq = lift(parse_weyl("x1^2", ctx.algebra()), ctx.lift_algebra_ptr());
    const auto comm = commutator(lp, lq);
    std::vector<W::term_type> terms;
    for (const auto& [m, c] : comm.terms())
        terms.emplace_back(m, specialize(exact_div(c, Cyclo::zeta(field)), field) * ctx.lambda());
    EXPECT_EQ(W::from_terms(ctx.algebra(), terms), parse_weyl("1 - 4*x1^2*d1^2", ctx.algebra()));
}

TEST(Poisson, SelfBracketVanishes) {
    testing::Rng g(51);
    for (int l : {2, 3, 5}) {
        const PoissonContext ctx(2, l);
        for (int it = 0; it < 5; ++it) {
            const auto p = theta(testing::random_center(g, 2, ctx.field()), ctx.algebra());
            EXPECT_TRUE(poisson_bracket(p, p, ctx).is_zero());
        }
    }
}

TEST(Poisson, NonCentralInputRejected) {
    const PoissonContext ctx(1, 3);
    EXPECT_THROW(poisson_bracket(W::x(ctx.algebra(), 1), W::one(ctx.algebra()), ctx), not_central);
}

TEST(Poisson, LiftIndependence) {
    testing::Rng g(52);
    for (int l : {2, 3, 5}) {
        const PoissonContext ctx(1, l);
        const auto la = ctx.lift_algebra_ptr();
        const auto& field = ctx.field();
        const auto shift = WeylElement<LiftRing>::scalar(la, CycloLaurent::from_coeffs(0, {-Cyclo::zeta(field), Cyclo(field, Rational(1))}));
        for (int it = 0; it < 6; ++it) {
            const auto p = theta(testing::random_center(g, 1, field), ctx.algebra());
            const auto q = theta(testing::random_center(g, 1, field), ctx.algebra());
            const auto x = lift(testing::random_root(g, ctx.algebra(), 3, 3), la);
            EXPECT_EQ(divided_bracket(lift(p, la) + mul(shift, x), lift(q, la), ctx), poisson_bracket(p, q, ctx));
            EXPECT_EQ(divided_bracket(lift(p, la), lift(q, la), ctx), poisson_bracket(p, q, ctx));
        }
    }
}

TEST(StandardBracket, SpecExamples) {
    const auto r1 = CenterPoly<Rational>::r(2, 1), s1 = CenterPoly<Rational>::s(2, 1), r2 = CenterPoly<Rational>::r(2, 2);
    EXPECT_EQ(standard_bracket(r1, s1), CenterPoly<Rational>::constant(2, Rational(1)));
    EXPECT_TRUE(standard_bracket(r1, r2).is_zero());
    EXPECT_EQ(standard_bracket(r1 * s1, s1), s1);
}

TEST(TransportedBracket, SpecExamples) {
    const auto r = CenterPoly<Rational>::r(1, 1), s = CenterPoly<Rational>::s(1, 1);
    EXPECT_EQ(print_center(transported_bracket(r, s, PoissonContext(1, 2))), "1 - 4*r1*s1");
    EXPECT_TRUE(transported_bracket(r, r, PoissonContext(1, 5)).is_zero());
    const auto r1 = CenterPoly<Rational>::r(2, 1), s2 = CenterPoly<Rational>::s(2, 2);
    EXPECT_TRUE(transported_bracket(r1, s2, PoissonContext(2, 3)).is_zero());
}

}  // namespace
}  // namespace qweyl
