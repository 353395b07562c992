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

#include "qweyl/matrep.hpp"

namespace qweyl {
namespace {

Cyclo rat(const FieldPtr& f, long n, long d = 1) { return Cyclo(f, Rational(n, d)); }

TEST(MatRep, LevelTwoAtOne) {
    const auto f = CycloField::make(2);
    const auto rep = build_rep(f, rat(f, 1), rat(f, 1));
    ASSERT_EQ(rep.X.size(), 2u);
    EXPECT_EQ(rep.X(0, 0), rat(f, 1));
    EXPECT_EQ(rep.X(1, 1), rat(f, -1));
    EXPECT_TRUE(rep.X(0, 1).is_zero() && rep.X(1, 0).is_zero());
    EXPECT_EQ(rep.Y(0, 0), rat(f, 1, 2));
    EXPECT_EQ(rep.Y(1, 1), rat(f, -1, 2));
    EXPECT_EQ((rep.Y * rep.Y).data(), (DenseMatrix<Cyclo>::identity(2, rat(f, 0), rat(f, 1)).data()));
    EXPECT_TRUE(rep_is_exact_solution(rep));
    EXPECT_EQ(burnside_span_dim(rep), 4);
}

TEST(MatRep, ExactSolutionsOnAGrid) {
    for (int l : {2, 3, 4, 5}) {
        const auto f = CycloField::make(l);
        for (long a : {0L, 1L, 1L << l})
            for (long b : {0L, 1L, 2L}) {
                if (a == 0 && b == 2) continue;  // 2 has no rational root
                const auto rep = build_rep(f, rat(f, a), rat(f, b));
                EXPECT_TRUE(rep_is_exact_solution(rep)) << "l=" << l << " a=" << a << " b=" << b;
            }
    }
}

TEST(MatRep, NilpotentRepresentation) {
    const auto f = CycloField::make(3);
    const auto rep = build_rep(f, rat(f, 0), rat(f, 0));
    ASSERT_TRUE(rep.nilpotent);
    const auto q = Cyclo::zeta(f);
    // X e_m = e_(m+1), Y e_m = [m]_q e_(m-1)
    EXPECT_EQ(rep.X(1, 0), rat(f, 1));
    EXPECT_EQ(rep.X(2, 1), rat(f, 1));
    EXPECT_EQ(rep.Y(0, 1), rat(f, 1));
    EXPECT_EQ(rep.Y(1, 2), rat(f, 1) + q);
    EXPECT_TRUE(rep_is_exact_solution(rep));
    EXPECT_EQ(burnside_span_dim(rep), 9);
}

TEST(MatRep, BoundaryLosesRank) {
    const auto f2 = CycloField::make(2);
    EXPECT_EQ(burnside_span_dim(build_rep(f2, rat(f2, 1), rat(f2, 1, 4))), 3);
    EXPECT_EQ(burnside_span_dim(build_rep(f2, rat(f2, 4), rat(f2, 1, 16), rat(f2, 2))), 3);
    const auto f3 = CycloField::make(3);
    const Cyclo one = rat(f3, 1), z = Cyclo::zeta(f3);
    const Cyclo b = ((one - z).pow(3)).inverse();
    const auto rep = build_rep(f3, one, b);
    EXPECT_TRUE(rep_is_exact_solution(rep));
    EXPECT_LT(burnside_span_dim(rep), 9);
    EXPECT_EQ(burnside_span_dim(build_rep(f3, one, one)), 9);
}

TEST(MatRep, DiagonalGeneratorHasDistinctEigenvalues) {
    const auto f = CycloField::make(5);
    const auto rep = build_rep(f, rat(f, 32), rat(f, 3));
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) EXPECT_NE(rep.X(i, i), rep.X(j, j));
    EXPECT_EQ(rep.X(0, 0), rat(f, 2));
    EXPECT_TRUE(rep_is_exact_solution(rep));
}

TEST(MatRep, RootsSuppliedOrMissing) {
    const auto f = CycloField::make(3);
    EXPECT_THROW(build_rep(f, rat(f, 2), rat(f, 1)), no_exact_root);
    EXPECT_THROW(build_rep(f, rat(f, 0), rat(f, 5)), no_exact_root);
    EXPECT_THROW(build_rep(f, rat(f, 8), rat(f, 1), rat(f, 3)), no_exact_root);
    EXPECT_THROW(build_rep(f, Cyclo::zeta(f), rat(f, 1)), no_exact_root);
}

TEST(MatRep, NonPrincipalRoot) {
    const auto f = CycloField::make(3);
    const auto z = Cyclo::zeta(f);
    const auto rep = build_rep(f, rat(f, 8), rat(f, 1), rat(f, 2) * z);
    EXPECT_TRUE(rep_is_exact_solution(rep));
    EXPECT_EQ(rep.X(0, 0), rat(f, 2) * z);
}

TEST(MatRep, NumericResiduals) {
    using Z = std::complex<double>;
    for (int l : {2, 3, 5, 7})
        for (Z a : {Z(0.0), Z(1.0), Z(0.3, -1.2)})
            for (Z b : {Z(0.0), Z(2.0), Z(-0.7, 0.4)}) {
                const auto rep = build_rep_numeric(l, a, b);
                EXPECT_LE(rep_max_residual(rep), 1e-9) << "l=" << l;
            }
    EXPECT_THROW(build_rep_numeric(1, 1.0, 1.0), domain_error);
}

TEST(MatRep, CrossCheckAgrees) {
    const auto f = CycloField::make(2);
    std::vector<std::pair<Cyclo, Cyclo>> pts;
    for (long a : {0L, 1L, 4L})
        for (const auto& b : {rat(f, 0), rat(f, 1, 4), rat(f, 1, 16)}) pts.emplace_back(rat(f, a), b);
    for (const auto& row : cross_check(f, pts)) EXPECT_TRUE(row.agrees);
    std::vector<std::pair<std::complex<double>, std::complex<double>>> num = {
        {1.0, 2.0}, {0.0, 1.0}, {1.0, 0.25}, {{0.0, 1.0}, {0.0, -0.25}}};
    for (const auto& row : cross_check_numeric(2, num)) EXPECT_TRUE(row.agrees);
}

}  // namespace
}  // namespace qweyl
