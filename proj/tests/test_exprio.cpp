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

namespace qweyl {
namespace {

using E = WeylElement<SymbolicRing>;

TEST(ParseWeyl, SpecExamples) {
    const auto a1 = symbolic_algebra(1);
    EXPECT_EQ(parse_weyl("d1*x1 - t*x1*d1", a1), E::one(a1));
    EXPECT_EQ(print_weyl(parse_weyl("f", a1)), "1 + (-1 + t)*x1*d1");
    const auto a2 = symbolic_algebra(2);
    const auto m = parse_weyl("x1^2*d2", a2);
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m.terms()[0].first, Monomial({2, 0}, {0, 1}));
    EXPECT_TRUE(m.terms()[0].second == RationalLaurent(Rational(1)));
}

TEST(PrintWeyl, SpecExamples) {
    const auto a1 = symbolic_algebra(1);
    EXPECT_EQ(print_weyl(parse_weyl("1 + t*x1*d1", a1)), "1 + t*x1*d1");
    EXPECT_EQ(print_weyl(E::zero(a1)), "0");
    EXPECT_EQ(print_weyl(parse_weyl("(1 + t)*x1", a1)), "(1 + t)*x1");
    EXPECT_EQ(print_weyl(parse_weyl("-x1 - 2*d1", a1)), "-x1 - 2*d1");
}

TEST(ParseWeyl, PrecedenceAndPowers) {
    const auto a1 = symbolic_algebra(1);
    EXPECT_EQ(parse_weyl("-x1^2", a1), -power(E::x(a1, 1), 2));
    EXPECT_EQ(parse_weyl("2*x1 + 3*x1", a1), parse_weyl("5*x1", a1));
    EXPECT_EQ(print_weyl(parse_weyl("t^-2*x1", a1)), "t^-2*x1");
    EXPECT_EQ(print_weyl(parse_weyl("(2*t)^-1", a1)), "1/2*t^-1");
    EXPECT_EQ(print_weyl(parse_weyl("3/6", a1)), "1/2");
    EXPECT_EQ(parse_weyl("x1 − x1", a1), E::zero(a1));
}

TEST(ParseWeyl, OrderMatters) {
    for (int l : {2, 3, 5}) {
        const auto alg = root_algebra(1, l);
        EXPECT_FALSE(parse_weyl("d1*x1", alg) == parse_weyl("x1*d1", alg));
    }
    const auto a1 = symbolic_algebra(1);
    EXPECT_FALSE(parse_weyl("d1*x1", a1) == parse_weyl("x1*d1", a1));
}

TEST(ParseWeyl, ContextSymbols) {
    const auto r3 = root_algebra(1, 3);
    EXPECT_EQ(print_weyl(parse_weyl("q^3", r3)), "1");
    EXPECT_EQ(parse_weyl("r1*s1", r3), parse_weyl("x1^3*d1^3", r3));
    const auto num = numeric_algebra(1, {0.0, 1.0});
    EXPECT_EQ(print_weyl(parse_weyl("0.5*i*x1", num)), "0.5*i*x1");
    EXPECT_THROW(parse_weyl("r1", symbolic_algebra(1)), parse_error);
    EXPECT_THROW(parse_weyl("0.5*x1", symbolic_algebra(1)), parse_error);
}

void expect_error_at(const std::string& src, std::size_t pos) {
    try {
        parse_weyl(src, symbolic_algebra(2));
        ADD_FAILURE() << "no error for '" << src << "'";
    } catch (const parse_error& e) {
        EXPECT_EQ(e.position(), pos) << src << ": " << e.what();
    }
}

TEST(ParseWeyl, PositionedErrors) {
    expect_error_at("d1 x1", 3);
    expect_error_at("x1 + $", 5);
    expect_error_at("x1^2^3", 4);
    expect_error_at("(x1 + d1", 8);
    expect_error_at("x1 + y1", 5);
    expect_error_at("f^-1", 1);
    expect_error_at("1/0", 2);
    EXPECT_THROW(parse_weyl("x3", symbolic_algebra(2)), index_out_of_range);
    EXPECT_THROW(parse_weyl("d0", symbolic_algebra(2)), parse_error);
}

TEST(ParseWeyl, RoundTrip) {
    testing::Rng g(31);
    for (int n = 1; n <= 2; ++n) {
        const auto sym = symbolic_algebra(n);
        for (int it = 0; it < 50; ++it) {
            const auto a = testing::random_symbolic(g, sym);
            EXPECT_EQ(parse_weyl(print_weyl(a), sym), a) << print_weyl(a);
        }
        for (int l : {3, 5, 8}) {
            const auto root = root_algebra(n, l);
            for (int it = 0; it < 20; ++it) {
                const auto a = testing::random_root(g, root);
                EXPECT_EQ(parse_weyl(print_weyl(a), root), a) << print_weyl(a);
            }
        }
    }
}

TEST(ParseWeyl, FuzzedTokenStreamsNeverCrash) {
    const std::vector<std::string> pieces = {"x1", "d2", "t", "f", "f1", "3", "1/2", "+", "-", "*", "^", "(", ")", "2", " ", "^-", "x9", "q", "@"};
    testing::Rng g(32);
    const auto alg = symbolic_algebra(2);
    int parsed = 0, rejected = 0;
    for (int it = 0; it < 3000; ++it) {
        std::string src;
        for (long k = 0, len = testing::uniform(g, 1, 9); k < len; ++k)
            src += pieces[static_cast<std::size_t>(testing::uniform(g, 0, static_cast<long>(pieces.size()) - 1))];
        try {
            const auto a = parse_weyl(src, alg);
            EXPECT_EQ(parse_weyl(print_weyl(a), alg), a);
            ++parsed;
        } catch (const error& e) {
            EXPECT_NE(std::string(e.what()).find("at "), std::string::npos) << src;
            ++rejected;
        }
    }
    EXPECT_GT(parsed, 0);
    EXPECT_GT(rejected, 0);
}

TEST(ParseCenter, SpecExamples) {
    EXPECT_EQ(print_center(parse_center("r1 + s1^2", 1)), "r1 + s1^2");
    EXPECT_TRUE(parse_center("r1*s1 - s1*r1", 1).is_zero());
    const auto p = parse_center("3/2*s2", 2);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p.terms()[0].second, Rational(3, 2));
    EXPECT_EQ(p.terms()[0].first, Monomial({0, 0}, {0, 1}));
    EXPECT_THROW(parse_center("x1", 1), parse_error);
    EXPECT_THROW(parse_center("r2", 1), index_out_of_range);
    EXPECT_EQ(print_center(parse_center("(r1 + s1)^2", 1)), "r1^2 + 2*r1*s1 + s1^2");
}

TEST(ParseCenter, RoundTrip) {
    testing::Rng g(33);
    const auto field = CycloField::make(5);
    for (int it = 0; it < 30; ++it) {
        const auto p = testing::random_center(g, 2, field, 3, 4);
        EXPECT_EQ(parse_center(print_center(p), 2, CycloRing(field)), p) << print_center(p);
    }
}

}  // namespace
}  // namespace qweyl
