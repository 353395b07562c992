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

#ifndef QWEYL_POISSON_HPP
#define QWEYL_POISSON_HPP

#include <map>
#include <unordered_map>
#include <utility>

#include "center.hpp"
#include "errors.hpp"
#include "weyl.hpp"

namespace qweyl {

/// 1 / (h(zeta) [l-1]_zeta!) with h = [l]_t / (t - zeta).
inline Cyclo poisson_lambda(const FieldPtr& field) {
    const int l = field->level();
    const CycloLaurent h = exact_div(qint(static_cast<unsigned long>(l)), Cyclo::zeta(field));
    const Cyclo h_at = specialize(h, field);
    const Cyclo fact = specialize(qfact(static_cast<unsigned long>(l - 1)), field);
    return (h_at * fact).inverse();
}

/// Level, algebras and normalizer for brackets on the center of A_q^n.
class PoissonContext {
   public:
    PoissonContext(int n, int level)
        : field_(CycloField::make(level)),
          alg_(root_algebra(n, field_)),
          lift_alg_(lift_algebra(n, field_)),
          lambda_(poisson_lambda(field_)) {}

    int n() const { return alg_->n(); }
    int level() const { return field_->level(); }
    const FieldPtr& field() const { return field_; }
    const AlgebraPtr<CycloRing>& algebra() const { return alg_; }
    const AlgebraPtr<LiftRing>& lift_algebra_ptr() const { return lift_alg_; }
    const Cyclo& lambda() const { return lambda_; }

   private:
    FieldPtr field_;
    AlgebraPtr<CycloRing> alg_;
    AlgebraPtr<LiftRing> lift_alg_;
    Cyclo lambda_;
};

/// The t-constant lift: same monomials, each coefficient a constant in t.
inline WeylElement<LiftRing> lift(const WeylElement<CycloRing>& a, const AlgebraPtr<LiftRing>& target) {
    return map_coefficients(a, target, [](const Cyclo& c) { return CycloLaurent(c); });
}

namespace detail {

/// lambda_q pi_q(c / (t - q)) coefficientwise.
inline WeylElement<CycloRing> divide_and_specialize(const WeylElement<LiftRing>& c, const PoissonContext& ctx) {
    std::vector<WeylElement<CycloRing>::term_type> terms;
    terms.reserve(c.size());
    for (const auto& [m, v] : c.terms()) terms.emplace_back(m, quotient_at_root(v, ctx.field()) * ctx.lambda());
    return WeylElement<CycloRing>::from_terms(ctx.algebra(), std::move(terms));
}

}  // namespace detail

/// lambda_q pi_q([P, Q] / (t - q)) for arbitrary lifts P, Q.
inline WeylElement<CycloRing> divided_bracket(const WeylElement<LiftRing>& p, const WeylElement<LiftRing>& q,
                                              const PoissonContext& ctx) {
    return detail::divide_and_specialize(commutator(p, q), ctx);
}

/// [lift(P), lift(Q)] over Q(zeta)[t, t^-1]. Both lifts have t-constant
/// coefficients, so the commutator is sum c_a c_b [m_a, m_b] with the
/// monomial commutators taken over Q[t, t^-1].
inline WeylElement<LiftRing> lifted_commutator(const WeylElement<CycloRing>& p, const WeylElement<CycloRing>& q,
                                               const PoissonContext& ctx) {
    const auto sym = symbolic_algebra(ctx.n());
    const auto& field = ctx.field();
    ReorderTable<SymbolicRing> table(sym->ring());
    const RationalLaurent one(Rational(1));
    std::unordered_map<Monomial, std::map<long, Cyclo>, MonomialHash> acc;
    for (const auto& [ma, ca] : p.terms()) {
        const auto ea = WeylElement<SymbolicRing>::term(sym, ma, one);
        for (const auto& [mb, cb] : q.terms()) {
            const auto eb = WeylElement<SymbolicRing>::term(sym, mb, one);
            const auto comm = mul(ea, eb, table) - mul(eb, ea, table);
            if (comm.is_zero()) continue;
            const Cyclo w = ca * cb;
            for (const auto& [m, poly] : comm.terms()) {
                auto& slot = acc[m];
                for (std::size_t k = 0; k < poly.coeffs().size(); ++k) {
                    if (poly.coeffs()[k].is_zero()) continue;
                    const long e = poly.low_degree() + static_cast<long>(k);
                    Cyclo term = w * Cyclo(field, poly.coeffs()[k]);
                    auto [it, fresh] = slot.try_emplace(e, term);
                    if (!fresh) it->second += term;
                }
            }
        }
    }
    std::vector<WeylElement<LiftRing>::term_type> terms;
    for (auto& [m, slot] : acc) {
        if (slot.empty()) continue;
        const long low = slot.begin()->first;
        std::vector<Cyclo> dense(static_cast<std::size_t>(slot.rbegin()->first - low + 1));
        for (auto& [e, c] : slot) dense[static_cast<std::size_t>(e - low)] = std::move(c);
        terms.emplace_back(m, CycloLaurent::from_coeffs(low, std::move(dense)));
    }
    return WeylElement<LiftRing>::from_terms(ctx.lift_algebra_ptr(), std::move(terms));
}

/// {P, Q}_q for central P, Q.
inline WeylElement<CycloRing> poisson_bracket(const WeylElement<CycloRing>& p, const WeylElement<CycloRing>& q,
                                              const PoissonContext& ctx) {
    if (!is_central(p)) throw not_central("first bracket argument is not central");
    if (!is_central(q)) throw not_central("second bracket argument is not central");
    return detail::divide_and_specialize(lifted_commutator(p, q, ctx), ctx);
}

/// sum_i dp/dr_i dq/ds_i - dq/dr_i dp/ds_i
template <class C>
CenterPoly<C> standard_bracket(const CenterPoly<C>& p, const CenterPoly<C>& q) {
    if (p.n() != q.n()) throw context_mismatch("center polynomials of different arity");
    CenterPoly<C> acc(p.n());
    for (int i = 1; i <= p.n(); ++i) {
        acc += p.derivative_r(i) * q.derivative_s(i);
        acc -= q.derivative_r(i) * p.derivative_s(i);
    }
    return acc;
}

/// theta^-1 {theta p, theta q}_q at the context's level.
inline CenterPoly<Cyclo> transported_bracket(const CenterPoly<Cyclo>& p, const CenterPoly<Cyclo>& q,
                                             const PoissonContext& ctx) {
    return theta_inverse(poisson_bracket(theta(p, ctx.algebra()), theta(q, ctx.algebra()), ctx));
}

inline CenterPoly<Cyclo> transported_bracket(const CenterPoly<Rational>& p, const CenterPoly<Rational>& q,
                                             const PoissonContext& ctx) {
    const auto& field = ctx.field();
    auto up = [&](const Rational& r) { return Cyclo(field, r); };
    return transported_bracket(p.map<Cyclo>(up), q.map<Cyclo>(up), ctx);
}

}  // namespace qweyl

#endif  // QWEYL_POISSON_HPP
