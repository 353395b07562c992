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

#ifndef QWEYL_TESTING_HPP
#define QWEYL_TESTING_HPP

// Seeded random elements for property checks.

#include <random>
#include <vector>

#include "center.hpp"
#include "weyl.hpp"

namespace qweyl::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

/// Nonzero rational with numerator in [-5, 5] and denominator in [1, 4].
inline Rational random_rational(Rng& g) {
    long num = 0;
    while (num == 0) num = uniform(g, -5, 5);
    return Rational(num, uniform(g, 1, 4));
}

inline RationalLaurent random_laurent(Rng& g) {
    const long low = uniform(g, -1, 1);
    std::vector<Rational> c;
    for (long k = 0, len = uniform(g, 1, 3); k < len; ++k) c.push_back(uniform(g, 0, 3) == 0 ? Rational() : random_rational(g));
    auto p = RationalLaurent::from_coeffs(low, std::move(c));
    return p.is_zero() ? RationalLaurent(random_rational(g)) : p;
}

inline Monomial random_monomial(Rng& g, int n, long max_degree, bool x_only = false, long min_degree = 0) {
    Monomial m(n);
    long budget = uniform(g, min_degree, max_degree);
    while (budget > 0) {
        const auto slot = static_cast<std::size_t>(uniform(g, 0, x_only ? n - 1 : 2 * n - 1));
        ++m[slot];
        --budget;
    }
    return m;
}

template <class Ring, class CoeffGen>
WeylElement<Ring> random_element(Rng& g, const AlgebraPtr<Ring>& alg, long max_degree, long max_terms, CoeffGen&& coeff,
                                 bool x_only = false) {
    std::vector<typename WeylElement<Ring>::term_type> terms;
    for (long k = 0, count = uniform(g, 1, max_terms); k < count; ++k)
        terms.emplace_back(random_monomial(g, alg->n(), max_degree, x_only), coeff(g));
    return WeylElement<Ring>::from_terms(alg, std::move(terms));
}

/// Random element of A_t^n.
inline WeylElement<SymbolicRing> random_symbolic(Rng& g, const AlgebraPtr<SymbolicRing>& alg, long max_degree = 4,
                                                 long max_terms = 6, bool x_only = false) {
    return random_element(g, alg, max_degree, max_terms, random_laurent, x_only);
}

/// Random element of Q(zeta_l) with small rational coordinates.
inline Cyclo random_cyclo(Rng& g, const FieldPtr& field) {
    std::vector<Rational> c(static_cast<std::size_t>(field->degree()));
    for (auto& v : c) v = uniform(g, 0, 2) == 0 ? Rational() : random_rational(g);
    auto out = Cyclo::from_coeffs(field, std::move(c));
    return out.is_zero() ? Cyclo(field, Rational(1)) : out;
}

inline WeylElement<CycloRing> random_root(Rng& g, const AlgebraPtr<CycloRing>& alg, long max_degree = 4,
                                          long max_terms = 6) {
    const auto& field = alg->ring().field;
    return random_element(g, alg, max_degree, max_terms, [&](Rng& r) { return random_cyclo(r, field); });
}

/// Random nonconstant center polynomial with Q(zeta_l) coefficients.
inline CenterPoly<Cyclo> random_center(Rng& g, int n, const FieldPtr& field, long max_degree = 2, long max_terms = 3) {
    std::vector<CenterPoly<Cyclo>::term_type> terms;
    for (long k = 0, count = uniform(g, 1, max_terms); k < count; ++k)
        terms.emplace_back(random_monomial(g, n, max_degree, false, 1), random_cyclo(g, field));
    if (uniform(g, 0, 1) == 1) terms.emplace_back(Monomial(n), random_cyclo(g, field));
    auto p = CenterPoly<Cyclo>::from_terms(n, std::move(terms));
    return p.is_zero() ? CenterPoly<Cyclo>::r(n, 1, Cyclo(field, Rational(1))) : p;
}

}  // namespace qweyl::testing

#endif  // QWEYL_TESTING_HPP
