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
#include "qweyl/testing.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl {
namespace {

using E = WeylElement<SymbolicRing>;

/// Brute-force normal ordering of the word d^b x^c by single swaps
/// d x -> t x d + 1, tracked as a map from (j, k) in x^j d^k to coefficients.
std::map<std::pair<int, int>, RationalLaurent> reorder_by_swaps(int b, int c) {
    // words represented as strings over {x, d}
    std::map<std::string, RationalLaurent> work{{std::string(b, 'd') + std::string(c, 'x'), RationalLaurent(Rational(1))}};
    std::map<std::pair<int, int>, RationalLaurent> done;
    while (!work.empty()) {
        auto [w, coeff] = *work.begin();
        work.erase(work.begin());
        const auto pos = w.find("dx");
        if (pos == std::string::npos) {
            const int j = static_cast<int>(std::count(w.begin(), w.end(), 'x'));
            done[{j, static_cast<int>(w.size()) - j}] += coeff;
            continue;
        }
        std::string swapped = w, dropped = w;
        swapped[pos] = 'x';
        swapped[pos + 1] = 'd';
        dropped.erase(pos, 2);
        work[swapped] += coeff * RationalLaurent::t();
        work[dropped] += coeff;
    }
    return done;
}

RationalLaurent qbinom(unsigned n, unsigned k) {
    // [n]!/([k]![n-k]!) via the Pascal rule [n k] = [n-1 k-1] + t^k [n-1 k]
    if (k == 0 || k == n) return RationalLaurent(Rational(1));
    return qbinom(n - 1, k - 1) + RationalLaurent::t(k) * qbinom(n - 1, k);
}

TEST(ReorderTable, MatchesSingleSwaps) {
    ReorderTable<SymbolicRing> table(SymbolicRing{});
    for (int b = 0; b <= 5; ++b) {
        for (int c = 0; c <= 5; ++c) {
            const auto brute = reorder_by_swaps(b, c);
            const auto& row = table.get(static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(c));
            for (std::size_t k = 0; k < row.size(); ++k)
                EXPECT_EQ(row[k], brute.at({c - static_cast<int>(k), b - static_cast<int>(k)})) << b << "," << c << "," << k;
            EXPECT_EQ(brute.size(), static_cast<std::size_t>(std::min(b, c) + 1));
        }
    }
}

TEST(ReorderTable, MatchesQBinomialClosedForm) {
    // T(b, c)[k] = [b k] [c k] [k]! t^((b-k)(c-k))
    ReorderTable<SymbolicRing> table(SymbolicRing{});
    for (unsigned b = 0; b <= 9; ++b)
        for (unsigned c = 0; c <= 9; ++c) {
            const auto& row = table.get(b, c);
            for (unsigned k = 0; k < row.size(); ++k)
                EXPECT_EQ(row[k], qbinom(b, k) * qbinom(c, k) * qfact(k) * RationalLaurent::t((b - k) * (c - k)));
        }
}

TEST(Weyl, DefiningRelations) {
    for (int n = 1; n <= 3; ++n) {
        const auto alg = symbolic_algebra(n);
        for (int i = 1; i <= n; ++i) {
            EXPECT_EQ(q_commutator(E::d(alg, i), E::x(alg, i)), E::one(alg));
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                EXPECT_TRUE(commutator(E::d(alg, i), E::x(alg, j)).is_zero());
                EXPECT_TRUE(commutator(E::x(alg, i), E::x(alg, j)).is_zero());
                EXPECT_TRUE(commutator(E::d(alg, i), E::d(alg, j)).is_zero());
            }
        }
    }
}

TEST(Weyl, SpecExamples) {
    const auto a1 = symbolic_algebra(1);
    EXPECT_EQ(print_weyl(mul(E::d(a1, 1), E::x(a1, 1))), "1 + t*x1*d1");
    EXPECT_EQ(print_weyl(mul(E::d(a1, 1), power(E::x(a1, 1), 2))), "(1 + t)*x1 + t^2*x1^2*d1");
    EXPECT_EQ(print_weyl(f_element(a1)), "1 + (-1 + t)*x1*d1");
    EXPECT_EQ(bernstein_degree(f_element(a1)), 2);
    const auto a2 = symbolic_algebra(2);
    const auto m = mul(power(E::x(a2, 1), 2), E::d(a2, 2));
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m.terms()[0].first, Monomial({2, 0}, {0, 1}));
}

TEST(Weyl, MoreSpecExamples) {
    const auto a1 = symbolic_algebra(1);
    const auto x = E::x(a1, 1), d = E::d(a1, 1);
    EXPECT_EQ(print_weyl(mul(x, d)), "x1*d1");
    EXPECT_EQ(print_weyl(power(x, 3)), "x1^3");
    EXPECT_EQ(power(x, 0), E::one(a1));
    EXPECT_EQ(print_weyl(power(d + x, 2)), "1 + x1^2 + (1 + t)*x1*d1 + d1^2");
    EXPECT_EQ(commutator(d, x), f_element(a1));
    EXPECT_TRUE(commutator(x, x).is_zero());
    EXPECT_EQ(bernstein_degree(E::one(a1)), 0);
    EXPECT_EQ(bernstein_degree(parse_weyl("x1^3*d1 + x1", a1)), 4);
    EXPECT_EQ(print_weyl(twist_by_f(x, 1)), "t*x1");
    EXPECT_EQ(print_weyl(twist_by_f(d, 1)), "t^-1*d1");
    EXPECT_EQ(twist_by_f(mul(x, d), 1), mul(x, d));
    // f for n = 2 against the hand expansion
    const auto a2 = symbolic_algebra(2);
    EXPECT_EQ(f_element(a2), parse_weyl("1 - (1 - t)*x1*d1 - (1 - t)*x2*d2 + (1 - t)^2*x1*x2*d1*d2", a2));
    // specializations
    const auto r3 = root_algebra(1, 3), r2 = root_algebra(1, 2);
    EXPECT_EQ(print_weyl(specialize_element(f_element(a1), r3)), "1 + (-1 + q)*x1*d1");
    EXPECT_TRUE(specialize_element(parse_weyl("(1 + t + t^2)*x1", a1), r3).is_zero());
    EXPECT_EQ(print_weyl(specialize_element(mul(d, x), r2)), "1 - x1*d1");
    EXPECT_EQ(print_weyl(f_element(r2)), "1 - 2*x1*d1");
    EXPECT_EQ(print_weyl(power(f_element(r2), 2)), "1 - 4*x1^2*d1^2");
}

TEST(Weyl, RingAxiomsAndAction) {
    testing::Rng g(21);
    for (int n = 1; n <= 2; ++n) {
        const auto alg = symbolic_algebra(n);
        for (int it = 0; it < 20; ++it) {
            const auto a = testing::random_symbolic(g, alg), b = testing::random_symbolic(g, alg),
                       c = testing::random_symbolic(g, alg);
            EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
            EXPECT_EQ(mul(a, b + c), mul(a, b) + mul(a, c));
            EXPECT_EQ(mul(E::one(alg), a), a);
            const auto v = testing::random_symbolic(g, alg, 4, 4, true);
            EXPECT_EQ(act(mul(a, b), v), act(a, act(b, v)));
        }
    }
}

TEST(Weyl, ActionOnPowers) {
    const auto alg = symbolic_algebra(1);
    const auto x3 = power(E::x(alg, 1), 3);
    EXPECT_EQ(print_weyl(act(E::d(alg, 1), x3)), "(1 + t + t^2)*x1^2");
    EXPECT_TRUE(act(power(E::d(alg, 1), 4), x3).is_zero());
    EXPECT_THROW(act(E::x(alg, 1), E::d(alg, 1)), domain_error);
}

TEST(Weyl, SpecializationIsHomomorphism) {
    testing::Rng g(22);
    for (int l : {2, 3, 5}) {
        const auto sym = symbolic_algebra(2);
        const auto root = root_algebra(2, l);
        for (int it = 0; it < 10; ++it) {
            const auto a = testing::random_symbolic(g, sym), b = testing::random_symbolic(g, sym);
            EXPECT_EQ(specialize_element(mul(a, b), root), mul(specialize_element(a, root), specialize_element(b, root)));
        }
    }
}

TEST(Weyl, TwistByF) {
    testing::Rng g(23);
    for (int n = 1; n <= 2; ++n) {
        const auto alg = symbolic_algebra(n);
        for (int it = 0; it < 15; ++it) {
            const auto a = testing::random_symbolic(g, alg);
            for (int i = 1; i <= n; ++i) EXPECT_EQ(mul(f_i(alg, i), a), mul(twist_by_f(a, i), f_i(alg, i)));
        }
    }
}

TEST(Weyl, FIsCommutatorOfGenerators) {
    const auto alg = symbolic_algebra(2);
    for (int i = 1; i <= 2; ++i) EXPECT_EQ(commutator(E::d(alg, i), E::x(alg, i)), f_i(alg, i));
}

TEST(Weyl, Divisibility) {
    testing::Rng g(24);
    for (int n = 1; n <= 2; ++n) {
        const auto alg = symbolic_algebra(n);
        EXPECT_FALSE(divisible_by_f(E::one(alg), 1));
        EXPECT_TRUE(divisible_by_f(f_i(alg, n), n));
        for (int it = 0; it < 20; ++it) {
            const auto a = testing::random_symbolic(g, alg);
            for (int i = 1; i <= n; ++i) {
                EXPECT_TRUE(divisible_by_f(mul(f_i(alg, i), a), i));
                EXPECT_TRUE(divisible_by_f(mul(mul(a, f_i(alg, i)), a), i));
            }
        }
    }
    // x d is not a multiple of f: its image under the quotient map is (1-t)^-1
    const auto a1 = symbolic_algebra(1);
    EXPECT_FALSE(divisible_by_f(mul(E::x(a1, 1), E::d(a1, 1)), 1));
}

TEST(Weyl, Errors) {
    const auto a1 = symbolic_algebra(1), a2 = symbolic_algebra(2);
    EXPECT_THROW(E::x(a1, 2), index_out_of_range);
    EXPECT_THROW(f_i(a1, 0), index_out_of_range);
    EXPECT_THROW(mul(E::x(a1, 1), E::x(a2, 1)), context_mismatch);
    EXPECT_THROW(bernstein_degree(E::zero(a1)), domain_error);
    EXPECT_THROW(root_algebra(1, 1), domain_error);
}

TEST(Weyl, NumericSpecialization) {
    const std::complex<double> q(0.3, 0.4);
    const auto alg = numeric_algebra(1, q);
    const auto c = q_commutator(WeylElement<NumericRing>::d(alg, 1), WeylElement<NumericRing>::x(alg, 1));
    ASSERT_EQ(c.size(), 1u);
    EXPECT_LT(std::abs(c.terms()[0].second - 1.0), 1e-15);
}

}  // namespace
}  // namespace qweyl
