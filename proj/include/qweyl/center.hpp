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

#ifndef QWEYL_CENTER_HPP
#define QWEYL_CENTER_HPP

#include <algorithm>
#include <complex>
#include <cstdlib>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "weyl.hpp"

namespace qweyl {

namespace detail {

template <class C>
C from_integer(long k) {
    return C(Rational(k));
}

template <>
inline std::complex<double> from_integer<std::complex<double>>(long k) {
    return {static_cast<double>(k), 0.0};
}

}  // namespace detail

/// Commutative polynomial in r_1..r_n, s_1..s_n. The monomial key stores the
/// r-exponents in its first half and the s-exponents in its second half.
template <class C>
class CenterPoly {
   public:
    using coeff_type = C;
    using term_type = std::pair<Monomial, C>;
    using map_type = std::unordered_map<Monomial, C, MonomialHash>;

    CenterPoly() = default;
    explicit CenterPoly(int n) : n_(n) {}

    static CenterPoly constant(int n, const C& c) { return term(n, Monomial(n), c); }
    static CenterPoly term(int n, Monomial m, const C& c) {
        if (m.n() != n) throw context_mismatch("monomial arity differs from the polynomial ring");
        CenterPoly p(n);
        if (!qweyl::is_zero(c)) p.terms_.emplace_back(std::move(m), c);
        return p;
    }
    /// r_i (1-based).
    static CenterPoly r(int n, int i, const C& one = detail::from_integer<C>(1)) {
        check_index(n, i);
        Monomial m(n);
        m.alpha(i - 1) = 1;
        return term(n, std::move(m), one);
    }
    /// s_i (1-based).
    static CenterPoly s(int n, int i, const C& one = detail::from_integer<C>(1)) {
        check_index(n, i);
        Monomial m(n);
        m.beta(i - 1) = 1;
        return term(n, std::move(m), one);
    }
    static CenterPoly from_map(int n, map_type acc) {
        CenterPoly p(n);
        p.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!qweyl::is_zero(c)) p.terms_.emplace_back(m, std::move(c));
        std::sort(p.terms_.begin(), p.terms_.end(),
                  [](const term_type& a, const term_type& b) { return GradedLex{}(a.first, b.first); });
        return p;
    }
    static CenterPoly from_terms(int n, std::vector<term_type> terms) {
        map_type acc;
        for (auto& [m, c] : terms) {
            if (m.n() != n) throw context_mismatch("monomial arity differs from the polynomial ring");
            auto [it, fresh] = acc.try_emplace(m, c);
            if (!fresh) it->second += c;
        }
        return from_map(n, std::move(acc));
    }

    int n() const noexcept { return n_; }
    const std::vector<term_type>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    C coeff(const Monomial& m) const {
        for (const auto& [k, c] : terms_)
            if (k == m) return c;
        return C{};
    }
    C constant_term() const { return coeff(Monomial(n_)); }

    /// Total degree in r and s; 0 for the zero polynomial.
    long degree() const {
        long d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    CenterPoly operator-() const {
        CenterPoly p(*this);
        for (auto& t : p.terms_) t.second = -t.second;
        return p;
    }
    CenterPoly& operator+=(const CenterPoly& o) { return combine(o, false); }
    CenterPoly& operator-=(const CenterPoly& o) { return combine(o, true); }
    friend CenterPoly operator+(CenterPoly a, const CenterPoly& b) { return a += b; }
    friend CenterPoly operator-(CenterPoly a, const CenterPoly& b) { return a -= b; }

    friend CenterPoly operator*(const CenterPoly& a, const CenterPoly& b) {
        check_same(a, b);
        const int n = std::max(a.n_, b.n_);
        map_type acc;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(n);
                for (std::size_t k = 0; k < static_cast<std::size_t>(2 * n); ++k)
                    m[k] = ma[k] + mb[k];
                C c = ca * cb;
                auto [it, fresh] = acc.try_emplace(std::move(m), c);
                if (!fresh) it->second += c;
            }
        return from_map(n, std::move(acc));
    }
    CenterPoly& operator*=(const CenterPoly& o) { return *this = *this * o; }

    CenterPoly scaled(const C& c) const {
        std::vector<term_type> out;
        for (const auto& [m, v] : terms_) out.emplace_back(m, v * c);
        return from_terms(n_, std::move(out));
    }

    CenterPoly pow(unsigned long e) const {
        CenterPoly r = constant(n_, detail::from_integer<C>(1)), b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    friend bool operator==(const CenterPoly& a, const CenterPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    /// d/dr_i
    CenterPoly derivative_r(int i) const { return derivative(i - 1, i); }
    /// d/ds_i
    CenterPoly derivative_s(int i) const { return derivative(n_ + i - 1, i); }

    /// Coefficientwise image under fn: C -> D.
    template <class D, class F>
    CenterPoly<D> map(F&& fn) const {
        std::vector<std::pair<Monomial, D>> out;
        out.reserve(terms_.size());
        for (const auto& [m, c] : terms_) out.emplace_back(m, fn(c));
        return CenterPoly<D>::from_terms(n_, std::move(out));
    }

    /// Value at r = rv, s = sv; conv maps coefficients into V.
    template <class V, class F>
    V evaluate(const std::vector<V>& rv, const std::vector<V>& sv, F&& conv) const {
        if (static_cast<int>(rv.size()) != n_ || static_cast<int>(sv.size()) != n_)
            throw context_mismatch("evaluation point of wrong arity");
        V acc = V{};
        for (const auto& [m, c] : terms_) {
            V t = conv(c);
            for (int i = 0; i < n_; ++i) {
                for (Monomial::exp_type k = 0; k < m.alpha(i); ++k) t = t * rv[static_cast<std::size_t>(i)];
                for (Monomial::exp_type k = 0; k < m.beta(i); ++k) t = t * sv[static_cast<std::size_t>(i)];
            }
            acc = acc + t;
        }
        return acc;
    }

   private:
    static void check_index(int n, int i) {
        if (i < 1 || i > n)
            throw index_out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }
    static void check_same(const CenterPoly& a, const CenterPoly& b) {
        if (a.n_ != b.n_ && a.n_ != 0 && b.n_ != 0) throw context_mismatch("center polynomials of different arity");
    }

    CenterPoly& combine(const CenterPoly& o, bool negate) {
        check_same(*this, o);
        if (n_ == 0) n_ = o.n_;
        std::vector<term_type> all = terms_;
        for (const auto& [m, c] : o.terms_) all.emplace_back(m, negate ? -c : c);
        *this = from_terms(n_, std::move(all));
        return *this;
    }

    CenterPoly derivative(int slot, int i) const {
        check_index(n_, i);
        std::vector<term_type> out;
        for (const auto& [m, c] : terms_) {
            const auto e = m[static_cast<std::size_t>(slot)];
            if (e == 0) continue;
            Monomial k = m;
            k[static_cast<std::size_t>(slot)] = e - 1;
            out.emplace_back(std::move(k), c * detail::from_integer<C>(static_cast<long>(e)));
        }
        return from_terms(n_, std::move(out));
    }

    int n_ = 0;
    std::vector<term_type> terms_;
};

/// True iff a commutes with every generator x_i, d_i.
template <class Ring>
bool is_central(const WeylElement<Ring>& a) {
    const auto& alg = a.algebra();
    if (a.is_zero()) return true;
    ReorderTable<Ring> table(alg->ring());
    for (int i = 1; i <= alg->n(); ++i) {
        for (const auto& g : {WeylElement<Ring>::x(alg, i), WeylElement<Ring>::d(alg, i)}) {
            if (!(mul(a, g, table) == mul(g, a, table))) return false;
        }
    }
    return true;
}

/// Theta_l: r_i -> d_i^l, s_i -> x_i^l into A_q^n at q = zeta_l. Each
/// r^a s^b lands on the PBW monomial x^(l b) d^(l a).
inline WeylElement<CycloRing> theta(const CenterPoly<Cyclo>& p, const AlgebraPtr<CycloRing>& alg) {
    if (p.n() != alg->n() && !p.is_zero()) throw context_mismatch("center polynomial and algebra differ in n");
    const auto l = static_cast<Monomial::exp_type>(alg->ring().level());
    const auto& field = alg->ring().field;
    std::vector<WeylElement<CycloRing>::term_type> terms;
    for (const auto& [m, c] : p.terms()) {
        Monomial w(alg->n());
        for (int i = 0; i < alg->n(); ++i) {
            w.alpha(i) = l * m.beta(i);
            w.beta(i) = l * m.alpha(i);
        }
        terms.emplace_back(std::move(w), c * Cyclo(field, Rational(1)));
    }
    return WeylElement<CycloRing>::from_terms(alg, std::move(terms));
}

inline WeylElement<CycloRing> theta(const CenterPoly<Rational>& p, const AlgebraPtr<CycloRing>& alg) {
    const auto& field = alg->ring().field;
    return theta(p.map<Cyclo>([&](const Rational& r) { return Cyclo(field, r); }), alg);
}

/// Inverse of theta on the center. Throws not_central when an exponent is not
/// a multiple of l or the element fails to commute with the generators.
inline CenterPoly<Cyclo> theta_inverse(const WeylElement<CycloRing>& a) {
    const int n = a.n();
    const auto l = static_cast<Monomial::exp_type>(a.ring().level());
    std::vector<CenterPoly<Cyclo>::term_type> terms;
    for (const auto& [m, c] : a.terms()) {
        Monomial k(n);
        for (int i = 0; i < n; ++i) {
            if (m.alpha(i) % l != 0 || m.beta(i) % l != 0)
                throw not_central("exponent not divisible by " + std::to_string(l));
            k.alpha(i) = m.beta(i) / l;
            k.beta(i) = m.alpha(i) / l;
        }
        terms.emplace_back(std::move(k), c);
    }
    if (!is_central(a)) throw not_central("element does not commute with the generators");
    return CenterPoly<Cyclo>::from_terms(n, std::move(terms));
}

/// prod_i (1 - (1-q)^l x_i^l d_i^l), built term by term.
inline WeylElement<CycloRing> f_power_closed_form(const AlgebraPtr<CycloRing>& alg) {
    const int n = alg->n();
    const auto& field = alg->ring().field;
    const auto l = static_cast<Monomial::exp_type>(field->level());
    const Cyclo one(field, Rational(1));
    const Cyclo c = -(one - Cyclo::zeta(field)).pow(l);
    std::vector<WeylElement<CycloRing>::term_type> terms;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        Monomial m(n);
        Cyclo coeff = one;
        for (int i = 0; i < n; ++i) {
            if (!(mask >> i & 1)) continue;
            m.alpha(i) = l;
            m.beta(i) = l;
            coeff *= c;
        }
        terms.emplace_back(std::move(m), coeff);
    }
    return WeylElement<CycloRing>::from_terms(alg, std::move(terms));
}

/// theta_inverse of the closed form: prod_i (1 - (1-q)^l r_i s_i).
inline CenterPoly<Cyclo> f_power_center(const FieldPtr& field, int n) {
    const Cyclo one(field, Rational(1));
    const Cyclo c = -(one - Cyclo::zeta(field)).pow(field->level());
    auto acc = CenterPoly<Cyclo>::constant(n, one);
    for (int i = 1; i <= n; ++i) {
        Monomial m(n);
        m.alpha(i - 1) = 1;
        m.beta(i - 1) = 1;
        acc *= CenterPoly<Cyclo>::constant(n, one) + CenterPoly<Cyclo>::term(n, m, c);
    }
    return acc;
}

/// Maximal central ideal (x_i^l - a_i, d_i^l - b_i).
template <class C>
struct MaxIdealPoint {
    std::vector<C> a;
    std::vector<C> b;
};

/// (1 - zeta_l)^(-l)
inline Cyclo azumaya_threshold(const FieldPtr& field) {
    const Cyclo one(field, Rational(1));
    return (one - Cyclo::zeta(field)).pow(-static_cast<long>(field->level()));
}

/// Exact Azumaya criterion: a_i b_i != (1-q)^(-l) for every i.
inline bool azumaya_test(const MaxIdealPoint<Cyclo>& pt, const FieldPtr& field) {
    if (pt.a.size() != pt.b.size()) throw context_mismatch("point coordinates of different arity");
    const Cyclo bad = azumaya_threshold(field);
    for (std::size_t i = 0; i < pt.a.size(); ++i)
        if (pt.a[i] * pt.b[i] == bad) return false;
    return true;
}

inline bool azumaya_test(const MaxIdealPoint<Rational>& pt, const FieldPtr& field) {
    MaxIdealPoint<Cyclo> c;
    for (const auto& v : pt.a) c.a.emplace_back(field, v);
    for (const auto& v : pt.b) c.b.emplace_back(field, v);
    return azumaya_test(c, field);
}

/// Numeric Azumaya criterion with absolute tolerance tol.
inline bool azumaya_test(const MaxIdealPoint<std::complex<double>>& pt, int level, double tol = 1e-9) {
    if (pt.a.size() != pt.b.size()) throw context_mismatch("point coordinates of different arity");
    const auto field = CycloField::make(level);
    const std::complex<double> bad = azumaya_threshold(field).embed();
    for (std::size_t i = 0; i < pt.a.size(); ++i)
        if (std::abs(pt.a[i] * pt.b[i] - bad) <= tol) return false;
    return true;
}

}  // namespace qweyl

#endif  // QWEYL_CENTER_HPP
