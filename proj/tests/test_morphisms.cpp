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

#include <cstdlib>

#include "qweyl/expr.hpp"
#include "qweyl/morphisms.hpp"
#include "qweyl/testing.hpp"

namespace qweyl {
namespace {

using E = WeylElement<SymbolicRing>;
using Endo = Endomorphism<SymbolicRing>;

Endo from_text(const AlgebraPtr<SymbolicRing>& alg, const std::vector<std::string>& xs, const std::vector<std::string>& ds) {
    std::vector<E> ix, id;
    for (const auto& s : xs) ix.push_back(parse_weyl(s, alg));
    for (const auto& s : ds) id.push_back(parse_weyl(s, alg));
    return Endo::make(alg, ix, id);
}

TEST(Validate, SpecExamples) {
    const auto alg = symbolic_algebra(1);
    EXPECT_TRUE(Endo::identity(alg).validated());
    EXPECT_TRUE(from_text(alg, {"x1"}, {"d1 + f"}).validated());
    const auto bad = from_text(alg, {"x1"}, {"d1 + x1"});
    EXPECT_FALSE(bad.validated());
    ASSERT_EQ(validate(bad).size(), 1u);
    EXPECT_EQ(validate(bad)[0].relation, "d1*x1 - t*x1*d1 - 1");
    EXPECT_EQ(print_weyl(validate(bad)[0].value), "(1 - t)*x1^2");
    // the same map is valid at t = 1
    const auto at_one = map_coefficients(validate(bad)[0].value, alg, [](const RationalLaurent& c) {
        return RationalLaurent(c.evaluate(Rational(1)));
    });
    EXPECT_TRUE(at_one.is_zero());
}

TEST(Validate, AllRelationFamilies) {
    const auto alg = symbolic_algebra(2);
    EXPECT_TRUE(Endo::identity(alg).validated());
    // swapping the pairs is an automorphism
    EXPECT_TRUE(from_text(alg, {"x2", "x1"}, {"d2", "d1"}).validated());
    const auto bad = from_text(alg, {"x1", "d1"}, {"d1", "d2"});
    std::vector<std::string> names;
    for (const auto& r : validate(bad)) names.push_back(r.relation);
    EXPECT_NE(std::find(names.begin(), names.end(), "x1*x2 - x2*x1"), names.end());
    EXPECT_THROW(apply(bad, E::x(alg, 1)), domain_error);
}

TEST(Apply, SpecExamples) {
    const auto alg = symbolic_algebra(1);
    const auto f = f_element(alg);
    EXPECT_EQ(apply(Endo::identity(alg), f), f);
    const auto e = from_text(alg, {"x1"}, {"d1 + f"});
    const auto dx = parse_weyl("d1*x1", alg);
    EXPECT_EQ(apply(e, dx), parse_weyl("1 + t*x1*d1 + t*x1*f", alg));
    EXPECT_EQ(apply(e, parse_weyl("d1*x1 - t*x1*d1", alg)), E::one(alg));
}

TEST(Apply, IsHomomorphismAndCommutesWithSpecialization) {
    testing::Rng g(61);
    const auto alg = symbolic_algebra(1);
    const auto e = lift_phi(parse_weyl("1 + x1", alg), alg);
    for (int it = 0; it < 10; ++it) {
        const auto a = testing::random_symbolic(g, alg, 3, 4), b = testing::random_symbolic(g, alg, 3, 4);
        EXPECT_EQ(apply(e, mul(a, b)), mul(apply(e, a), apply(e, b)));
        for (int l : {3, 5}) {
            const auto root = root_algebra(1, l);
            EXPECT_EQ(specialize_element(apply(e, a), root), apply(specialize(e, root), specialize_element(a, root)));
        }
    }
}

TEST(Apply, DegreeGuard) {
    const auto alg = symbolic_algebra(1);
    const auto e = lift_phi(Rational(1), 2, alg);
    EXPECT_THROW(apply(e, power(E::d(alg, 1), 10), 20), degree_limit_exceeded);
    EXPECT_NO_THROW(apply(e, power(E::d(alg, 1), 5), 20));
    EXPECT_EQ(default_degree_limit(), std::getenv("QWEYL_MAX_DEGREE") ? std::atol(std::getenv("QWEYL_MAX_DEGREE")) : 512);
}

TEST(Compose, SpecExamples) {
    const auto alg = symbolic_algebra(1);
    const auto e = lift_phi(parse_weyl("x1", alg), alg);
    EXPECT_EQ(compose(Endo::identity(alg), e), e);
    EXPECT_EQ(compose(e, Endo::identity(alg)), e);
    const auto half = lift_phi(Rational(1, 2), 0, alg);
    const auto c = compose(half, half);
    EXPECT_TRUE(c.validated());
    const auto f = f_element(alg);
    const auto half_c = RationalLaurent(Rational(1, 2));
    EXPECT_EQ(c.image_d(1), E::d(alg, 1) + f.scaled(half_c) + apply(half, f).scaled(half_c));
}

TEST(Compose, Associative) {
    const auto alg = symbolic_algebra(1);
    const auto a = lift_phi(parse_weyl("x1", alg), alg);
    const auto b = lift_psi(parse_weyl("d1", alg), alg);
    const auto c = lift_phi(parse_weyl("1/2", alg), alg);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
}

TEST(OneDimRep, SpecExamples) {
    const auto r2 = root_algebra(1, 2);
    const auto e2 = one_dim_rep({Cyclo(r2->ring().field, Rational(1))}, r2);
    EXPECT_TRUE(e2.validated());
    EXPECT_EQ(print_weyl(e2.image_d(1)), "1/2");
    const auto r3 = root_algebra(1, 3);
    const auto& f3 = r3->ring().field;
    const auto e3 = one_dim_rep({Cyclo::zeta(f3)}, r3);
    EXPECT_TRUE(e3.validated());
    EXPECT_THROW(one_dim_rep({Cyclo(f3, Rational())}, r3), domain_error);
    // not injective: d - (1-q)^-1 a^-1 is killed
    const Cyclo k = (Cyclo(f3, Rational(1)) - Cyclo::zeta(f3)).inverse() * Cyclo::zeta(f3).inverse();
    const auto killed = WeylElement<CycloRing>::d(r3, 1) - WeylElement<CycloRing>::scalar(r3, k);
    EXPECT_TRUE(apply(e3, killed).is_zero());
}

TEST(Lifts, ConstructorsValidate) {
    const auto alg = symbolic_algebra(1);
    const auto phi1 = lift_phi(parse_weyl("1", alg), alg);
    EXPECT_EQ(phi1.image_d(1), parse_weyl("d1 + f", alg));
    const auto psi = lift_psi(parse_weyl("d1", alg), alg);
    EXPECT_EQ(psi.image_x(1), parse_weyl("x1 + f*d1", alg));
    for (const char* lam : {"1", "1/2", "2", "-3"})
        for (unsigned m = 0; m <= 4; ++m) {
            EXPECT_TRUE(lift_phi(Rational::parse(lam), m, alg).validated());
            EXPECT_TRUE(lift_psi(Rational::parse(lam), m, alg).validated());
        }
    EXPECT_EQ(lift_phi(Rational(3), 2, alg).image_d(1), parse_weyl("d1 + 3*x1^2*f", alg));
    EXPECT_THROW(lift_phi(parse_weyl("d1", alg), alg), domain_error);
    EXPECT_THROW(lift_phi(parse_weyl("x1", symbolic_algebra(2)), symbolic_algebra(2)), domain_error);
}

TEST(Lifts, SpecializeAtOneToClassicalMaps) {
    const auto alg = symbolic_algebra(1);
    auto at_one = [&](const E& a) {
        return map_coefficients(a, alg, [](const RationalLaurent& c) { return RationalLaurent(c.evaluate(Rational(1))); });
    };
    const auto e = lift_phi(parse_weyl("x1^2 + 1", alg), alg);
    EXPECT_EQ(at_one(e.image_d(1)), parse_weyl("d1 + x1^2 + 1", alg));
    // two lifts of the identity
    const auto id0 = lift_phi(E::zero(alg), alg);
    const auto other = from_text(alg, {"x1"}, {"d1 + (t - 1)*f"});
    EXPECT_TRUE(other.validated());
    EXPECT_FALSE(id0 == other);
    EXPECT_EQ(at_one(other.image_d(1)), E::d(alg, 1));
    EXPECT_EQ(at_one(id0.image_d(1)), E::d(alg, 1));
}

}  // namespace
}  // namespace qweyl
