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

#ifndef QWEYL_WEYL_HPP
#define QWEYL_WEYL_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalars.hpp"

namespace qweyl {

/// Exponent vector of a PBW monomial x^alpha d^beta, stored as (alpha, beta)
/// in one array of length 2n. The same layout keys center polynomials, where
/// the halves are the exponents of r and s.
class Monomial {
   public:
    using exp_type = std::uint32_t;

    Monomial() = default;
    explicit Monomial(int n) : e_(2 * static_cast<std::size_t>(n), 0) {}
    Monomial(std::vector<exp_type> alpha, const std::vector<exp_type>& beta) : e_(std::move(alpha)) {
        if (e_.size() != beta.size()) throw context_mismatch("alpha and beta of different arity");
        e_.insert(e_.end(), beta.begin(), beta.end());
    }

    int n() const noexcept { return static_cast<int>(e_.size() / 2); }
    exp_type alpha(int i) const { return e_[static_cast<std::size_t>(i)]; }
    exp_type beta(int i) const { return e_[static_cast<std::size_t>(n() + i)]; }
    exp_type& alpha(int i) { return e_[static_cast<std::size_t>(i)]; }
    exp_type& beta(int i) { return e_[static_cast<std::size_t>(n() + i)]; }
    std::vector<exp_type> alphas() const { return {e_.begin(), e_.begin() + n()}; }
    std::vector<exp_type> betas() const { return {e_.begin() + n(), e_.end()}; }
    const std::vector<exp_type>& exponents() const noexcept { return e_; }
    exp_type& operator[](std::size_t k) { return e_[k]; }
    exp_type operator[](std::size_t k) const { return e_[k]; }

    long degree() const { return std::accumulate(e_.begin(), e_.end(), 0L); }
    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](exp_type v) { return v == 0; });
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

   private:
    std::vector<exp_type> e_;
};

/// Graded lexicographic order: lower Bernstein degree first; within a degree
/// the lexicographically larger (alpha, beta) first, so x^2 < x d < d^2.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const long da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exponents() > b.exponents();
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto v : m.exponents()) h = (h ^ v) * 0x100000001b3ULL;
        return h;
    }
};

template <class Ring>
class WeylElement;

/// A_t^n or one of its specializations: n variable pairs over a coefficient ring.
template <class Ring>
class WeylAlgebra {
   public:
    using ring_type = Ring;
    using coeff_type = typename Ring::value_type;
    using element_type = WeylElement<Ring>;

    WeylAlgebra(int n, Ring ring) : n_(n), ring_(std::move(ring)) {
        if (n < 1) throw domain_error("an algebra needs at least one variable pair");
    }
    static std::shared_ptr<const WeylAlgebra> make(int n, Ring ring) {
        return std::make_shared<const WeylAlgebra>(n, std::move(ring));
    }

    int n() const noexcept { return n_; }
    const Ring& ring() const noexcept { return ring_; }

    friend bool operator==(const WeylAlgebra& a, const WeylAlgebra& b) {
        return a.n_ == b.n_ && a.ring_ == b.ring_;
    }

   private:
    int n_;
    Ring ring_;
};

template <class Ring>
using AlgebraPtr = std::shared_ptr<const WeylAlgebra<Ring>>;

using SymbolicAlgebra = WeylAlgebra<SymbolicRing>;
using RootAlgebra = WeylAlgebra<CycloRing>;
using LiftAlgebra = WeylAlgebra<LiftRing>;
using NumericAlgebra = WeylAlgebra<NumericRing>;

inline AlgebraPtr<SymbolicRing> symbolic_algebra(int n) { return SymbolicAlgebra::make(n, SymbolicRing{}); }
inline AlgebraPtr<CycloRing> root_algebra(int n, int level) {
    if (level < 2) throw domain_error("root of unity level must be at least 2");
    return RootAlgebra::make(n, CycloRing(level));
}
inline AlgebraPtr<CycloRing> root_algebra(int n, FieldPtr field) {
    if (field->level() < 2) throw domain_error("root of unity level must be at least 2");
    return RootAlgebra::make(n, CycloRing(std::move(field)));
}
inline AlgebraPtr<LiftRing> lift_algebra(int n, FieldPtr field) { return LiftAlgebra::make(n, LiftRing(std::move(field))); }
inline AlgebraPtr<NumericRing> numeric_algebra(int n, std::complex<double> q) {
    return NumericAlgebra::make(n, NumericRing(q));
}

/// Element of a (specialized) quantized Weyl algebra in PBW normal form:
/// a finite sum of c * x^alpha d^beta with every x left of every d.
/// Terms are kept sorted in GradedLex order with no zero coefficients.
template <class Ring>
class WeylElement {
   public:
    using coeff_type = typename Ring::value_type;
    using term_type = std::pair<Monomial, coeff_type>;

    WeylElement() = default;
    explicit WeylElement(AlgebraPtr<Ring> alg) : alg_(std::move(alg)) {}

    static WeylElement zero(AlgebraPtr<Ring> alg) { return WeylElement(std::move(alg)); }
    static WeylElement scalar(AlgebraPtr<Ring> alg, const coeff_type& c) {
        WeylElement e(alg);
        if (!qweyl::is_zero(c)) e.terms_.emplace_back(Monomial(alg->n()), c);
        return e;
    }
    static WeylElement one(AlgebraPtr<Ring> alg) {
        auto c = alg->ring().from_rational(Rational(1));
        return scalar(std::move(alg), c);
    }
    static WeylElement term(AlgebraPtr<Ring> alg, Monomial m, const coeff_type& c) {
        if (m.n() != alg->n()) throw context_mismatch("monomial arity differs from the algebra");
        WeylElement e(std::move(alg));
        if (!qweyl::is_zero(c)) e.terms_.emplace_back(std::move(m), c);
        return e;
    }
    /// x_i (1-based index).
    static WeylElement x(AlgebraPtr<Ring> alg, int i) {
        check_index(*alg, i);
        Monomial m(alg->n());
        m.alpha(i - 1) = 1;
        auto c = alg->ring().from_rational(Rational(1));
        return term(std::move(alg), std::move(m), c);
    }
    /// d_i (1-based index).
    static WeylElement d(AlgebraPtr<Ring> alg, int i) {
        check_index(*alg, i);
        Monomial m(alg->n());
        m.beta(i - 1) = 1;
        auto c = alg->ring().from_rational(Rational(1));
        return term(std::move(alg), std::move(m), c);
    }

    /// Builds an element from arbitrary (possibly repeated) terms.
    static WeylElement from_terms(AlgebraPtr<Ring> alg, std::vector<term_type> terms) {
        std::unordered_map<Monomial, coeff_type, MonomialHash> acc;
        for (auto& [m, c] : terms) {
            if (m.n() != alg->n()) throw context_mismatch("monomial arity differs from the algebra");
            auto [it, fresh] = acc.try_emplace(m, c);
            if (!fresh) it->second += c;
        }
        return from_map(std::move(alg), std::move(acc));
    }

    const AlgebraPtr<Ring>& algebra() const noexcept { return alg_; }
    int n() const { return alg_->n(); }
    const Ring& ring() const { return alg_->ring(); }
    const std::vector<term_type>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    coeff_type coeff(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const term_type& t, const Monomial& k) { return GradedLex{}(t.first, k); });
        if (it != terms_.end() && it->first == m) return it->second;
        return coeff_type{};
    }

    WeylElement operator-() const {
        WeylElement r(*this);
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }
    WeylElement& operator+=(const WeylElement& o) { return merge(o, false); }
    WeylElement& operator-=(const WeylElement& o) { return merge(o, true); }
    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }

    WeylElement scaled(const coeff_type& c) const {
        WeylElement r(alg_);
        if (qweyl::is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& [m, v] : terms_) {
            coeff_type p = v * c;
            if (!qweyl::is_zero(p)) r.terms_.emplace_back(m, std::move(p));
        }
        return r;
    }

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        if (a.alg_ && b.alg_ && !(*a.alg_ == *b.alg_)) return false;
        return a.terms_ == b.terms_;
    }

    static WeylElement from_map(AlgebraPtr<Ring> alg, std::unordered_map<Monomial, coeff_type, MonomialHash> acc) {
        WeylElement e(std::move(alg));
        e.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!qweyl::is_zero(c)) e.terms_.emplace_back(m, std::move(c));
        std::sort(e.terms_.begin(), e.terms_.end(),
                  [](const term_type& a, const term_type& b) { return GradedLex{}(a.first, b.first); });
        return e;
    }

   private:
    static void check_index(const WeylAlgebra<Ring>& alg, int i) {
        if (i < 1 || i > alg.n())
            throw index_out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(alg.n()));
    }

    WeylElement& merge(const WeylElement& o, bool negate) {
        require_same(o);
        if (!alg_) alg_ = o.alg_;
        std::vector<term_type> out;
        out.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin(), ae = terms_.end();
        auto b = o.terms_.begin(), be = o.terms_.end();
        const GradedLex less;
        while (a != ae || b != be) {
            if (b == be || (a != ae && less(a->first, b->first))) {
                out.push_back(std::move(*a++));
            } else if (a == ae || less(b->first, a->first)) {
                out.emplace_back(b->first, negate ? -b->second : b->second);
                ++b;
            } else {
                coeff_type c = std::move(a->second);
                if (negate)
                    c -= b->second;
                else
                    c += b->second;
                if (!qweyl::is_zero(c)) out.emplace_back(std::move(a->first), std::move(c));
                ++a;
                ++b;
            }
        }
        terms_ = std::move(out);
        return *this;
    }

   public:
    void require_same(const WeylElement& o) const {
        if (alg_ && o.alg_ && alg_ != o.alg_ && !(*alg_ == *o.alg_))
            throw context_mismatch("elements of different algebras");
    }

   private:
    AlgebraPtr<Ring> alg_;
    std::vector<term_type> terms_;
};


/// Normal-ordering table for one variable pair: d^b x^c = sum_k T(b,c)[k] x^(c-k) d^(b-k).
///
/// Row b is obtained from row b-1 by one more left multiplication with d and
/// the rewrite d x^m = [m] x^(m-1) + t^m x^m d:
///   T(b,c)[k] = t^(c-k) T(b-1,c)[k] + [c-k+1] T(b-1,c)[k-1].
/// Rows are memoized; one table may serve a whole sequence of products.
template <class Ring>
class ReorderTable {
   public:
    using coeff_type = typename Ring::value_type;

    explicit ReorderTable(const Ring& ring) : ring_(ring) {}

    const std::vector<coeff_type>& get(std::uint32_t b, std::uint32_t c) {
        const auto key = (static_cast<std::uint64_t>(b) << 32) | c;
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::vector<coeff_type> row;
        if (b == 0 || c == 0) {
            row.push_back(ring_.from_rational(Rational(1)));
        } else {
            // node-based map: references survive later insertions
            const std::vector<coeff_type>& prev = get(b - 1, c);
            row.resize(std::min(b, c) + 1);
            for (std::size_t k = 0; k < prev.size(); ++k) {
                if (qweyl::is_zero(prev[k])) continue;
                const auto m = c - static_cast<std::uint32_t>(k);
                row[k] += param_power(m) * prev[k];
                if (m > 0) row[k + 1] += qint(m) * prev[k];
            }
        }
        return memo_.emplace(key, std::move(row)).first->second;
    }

    const coeff_type& qint(std::uint32_t m) {
        if (auto it = qints_.find(m); it != qints_.end()) return it->second;
        return qints_.emplace(m, ring_qint(ring_, m)).first->second;
    }
    const coeff_type& param_power(std::uint32_t m) {
        if (auto it = powers_.find(m); it != powers_.end()) return it->second;
        return powers_.emplace(m, ring_.param_power(static_cast<long>(m))).first->second;
    }

   private:
    Ring ring_;
    std::unordered_map<std::uint64_t, std::vector<coeff_type>> memo_;
    std::unordered_map<std::uint32_t, coeff_type> qints_;
    std::unordered_map<std::uint32_t, coeff_type> powers_;
};

namespace detail {

template <class Ring>
void accumulate_product(const Monomial& ma, const typename Ring::value_type& ca, const Monomial& mb,
                        const typename Ring::value_type& cb, ReorderTable<Ring>& table,
                        std::unordered_map<Monomial, typename Ring::value_type, MonomialHash>& acc) {
    using C = typename Ring::value_type;
    const int n = ma.n();
    C base = ca * cb;
    if (qweyl::is_zero(base)) return;
    // Per-index reorder rows; the cartesian product over indices gives the result.
    std::vector<const std::vector<C>*> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = &table.get(ma.beta(i), mb.alpha(i));

    if (n == 1) {
        const auto& row = *rows[0];
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (qweyl::is_zero(row[k])) continue;
            Monomial m(1);
            m.alpha(0) = ma.alpha(0) + mb.alpha(0) - static_cast<std::uint32_t>(k);
            m.beta(0) = ma.beta(0) + mb.beta(0) - static_cast<std::uint32_t>(k);
            C c = base * row[k];
            auto [it, fresh] = acc.try_emplace(std::move(m), std::move(c));
            if (!fresh) it->second += c;
        }
        return;
    }

    std::vector<std::size_t> k(static_cast<std::size_t>(n), 0);
    std::function<void(int, const C&)> rec = [&](int i, const C& coeff) {
        if (i == n) {
            Monomial m(n);
            for (int j = 0; j < n; ++j) {
                const auto kj = static_cast<std::uint32_t>(k[static_cast<std::size_t>(j)]);
                m.alpha(j) = ma.alpha(j) + mb.alpha(j) - kj;
                m.beta(j) = ma.beta(j) + mb.beta(j) - kj;
            }
            auto [it, fresh] = acc.try_emplace(std::move(m), coeff);
            if (!fresh) it->second += coeff;
            return;
        }
        const auto& row = *rows[static_cast<std::size_t>(i)];
        for (std::size_t kk = 0; kk < row.size(); ++kk) {
            if (qweyl::is_zero(row[kk])) continue;
            k[static_cast<std::size_t>(i)] = kk;
            rec(i + 1, coeff * row[kk]);
        }
    };
    rec(0, base);
}

}  // namespace detail

/// PBW normal form of a * b, reusing a caller-supplied reorder table.
template <class Ring>
WeylElement<Ring> mul(const WeylElement<Ring>& a, const WeylElement<Ring>& b, ReorderTable<Ring>& table) {
    a.require_same(b);
    const auto& alg = a.algebra() ? a.algebra() : b.algebra();
    if (a.is_zero() || b.is_zero()) return WeylElement<Ring>(alg);
    std::unordered_map<Monomial, typename Ring::value_type, MonomialHash> acc;
    acc.reserve(a.size() * b.size() * 2);
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) detail::accumulate_product(ma, ca, mb, cb, table, acc);
    return WeylElement<Ring>::from_map(alg, std::move(acc));
}

/// PBW normal form of a * b.
template <class Ring>
WeylElement<Ring> mul(const WeylElement<Ring>& a, const WeylElement<Ring>& b) {
    const auto& alg = a.algebra() ? a.algebra() : b.algebra();
    ReorderTable<Ring> table(alg->ring());
    return mul(a, b, table);
}

template <class Ring>
WeylElement<Ring> operator*(const WeylElement<Ring>& a, const WeylElement<Ring>& b) {
    return mul(a, b);
}

/// [a, b] = ab - ba.
template <class Ring>
WeylElement<Ring> commutator(const WeylElement<Ring>& a, const WeylElement<Ring>& b) {
    ReorderTable<Ring> table(a.algebra()->ring());
    return mul(a, b, table) - mul(b, a, table);
}

/// [a, b]_t = ab - t ba (t is the algebra's parameter, so q when specialized).
template <class Ring>
WeylElement<Ring> q_commutator(const WeylElement<Ring>& a, const WeylElement<Ring>& b) {
    ReorderTable<Ring> table(a.algebra()->ring());
    return mul(a, b, table) - mul(b, a, table).scaled(a.ring().param_power(1));
}

/// a^k by sequential left multiplication; binary powering when a has at most
/// two terms.
template <class Ring>
WeylElement<Ring> power(const WeylElement<Ring>& a, unsigned long k, ReorderTable<Ring>& table) {
    auto result = WeylElement<Ring>::one(a.algebra());
    if (k == 0) return result;
    if (a.size() <= 2) {
        WeylElement<Ring> base = a;
        bool first = true;
        while (k) {
            if (k & 1) {
                result = first ? base : mul(base, result, table);
                first = false;
            }
            k >>= 1;
            if (k) base = mul(base, base, table);
        }
        return result;
    }
    result = a;
    for (unsigned long i = 1; i < k; ++i) result = mul(a, result, table);
    return result;
}

template <class Ring>
WeylElement<Ring> power(const WeylElement<Ring>& a, unsigned long k) {
    ReorderTable<Ring> table(a.algebra()->ring());
    return power(a, k, table);
}

/// f_i = [d_i, x_i] = 1 - (1 - t) x_i d_i.
template <class Ring>
WeylElement<Ring> f_i(const AlgebraPtr<Ring>& alg, int i) {
    if (i < 1 || i > alg->n())
        throw index_out_of_range("f index " + std::to_string(i) + " outside 1.." + std::to_string(alg->n()));
    const auto& ring = alg->ring();
    Monomial m(alg->n());
    m.alpha(i - 1) = 1;
    m.beta(i - 1) = 1;
    auto one = ring.from_rational(Rational(1));
    auto c = ring.param_power(1) - one;  // -(1 - t)
    return WeylElement<Ring>::one(alg) + WeylElement<Ring>::term(alg, std::move(m), c);
}

/// f = f_1 f_2 ... f_n.
template <class Ring>
WeylElement<Ring> f_element(const AlgebraPtr<Ring>& alg) {
    auto r = f_i(alg, 1);
    for (int i = 2; i <= alg->n(); ++i) r = mul(r, f_i(alg, i));
    return r;
}

/// Maximal Bernstein degree |alpha| + |beta| over the terms.
template <class Ring>
long bernstein_degree(const WeylElement<Ring>& a) {
    if (a.is_zero()) throw domain_error("the zero element has no Bernstein degree");
    long d = 0;
    for (const auto& [m, c] : a.terms()) d = std::max(d, m.degree());
    return d;
}

/// Action on polynomials in x: x_i multiplies, d_i acts by
/// d_i(x_i^m) = [m] x_i^(m-1). v must contain no d.
template <class Ring>
WeylElement<Ring> act(const WeylElement<Ring>& a, const WeylElement<Ring>& v) {
    a.require_same(v);
    const auto& ring = a.ring();
    const int n = a.n();
    std::vector<typename WeylElement<Ring>::term_type> terms;
    for (const auto& [mv, cv] : v.terms()) {
        for (int i = 0; i < n; ++i)
            if (mv.beta(i) != 0) throw domain_error("act: the operand must be a polynomial in x");
    }
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mv, cv] : v.terms()) {
            Monomial out(n);
            auto c = ca * cv;
            bool zero = false;
            for (int i = 0; i < n && !zero; ++i) {
                const auto g = mv.alpha(i), b = ma.beta(i);
                if (g < b) {
                    zero = true;
                    break;
                }
                for (auto k = g; k > g - b; --k) c = c * ring_qint(ring, k);
                out.alpha(i) = ma.alpha(i) + g - b;
            }
            if (!zero) terms.emplace_back(std::move(out), std::move(c));
        }
    }
    return WeylElement<Ring>::from_terms(a.algebra() ? a.algebra() : v.algebra(), std::move(terms));
}

/// Q with f_i a = Q f_i: each coefficient scaled by t^(alpha_i - beta_i).
template <class Ring>
WeylElement<Ring> twist_by_f(const WeylElement<Ring>& a, int i) {
    if (i < 1 || i > a.n())
        throw index_out_of_range("f index " + std::to_string(i) + " outside 1.." + std::to_string(a.n()));
    std::vector<typename WeylElement<Ring>::term_type> terms;
    terms.reserve(a.size());
    for (const auto& [m, c] : a.terms()) {
        const long shift = static_cast<long>(m.alpha(i - 1)) - static_cast<long>(m.beta(i - 1));
        terms.emplace_back(m, shift == 0 ? c : c * a.ring().param_power(shift));
    }
    return WeylElement<Ring>::from_terms(a.algebra(), std::move(terms));
}

/// Coefficientwise image of a under fn into the algebra target (same n).
template <class Target, class Source, class F>
WeylElement<Target> map_coefficients(const WeylElement<Source>& a, const AlgebraPtr<Target>& target, F&& fn) {
    if (a.n() != target->n()) throw context_mismatch("algebras with different numbers of variables");
    std::vector<typename WeylElement<Target>::term_type> terms;
    terms.reserve(a.size());
    for (const auto& [m, c] : a.terms()) terms.emplace_back(m, fn(c));
    return WeylElement<Target>::from_terms(target, std::move(terms));
}

/// pi_q: coefficientwise t -> zeta_l.
inline WeylElement<CycloRing> specialize_element(const WeylElement<SymbolicRing>& a, const AlgebraPtr<CycloRing>& target) {
    const auto& field = target->ring().field;
    return map_coefficients(a, target, [&](const RationalLaurent& c) { return specialize(c, field); });
}

inline WeylElement<CycloRing> specialize_element(const WeylElement<SymbolicRing>& a, int level) {
    return specialize_element(a, root_algebra(a.n(), level));
}

/// pi_q on the algebra over Q(zeta_l)[t, t^-1].
inline WeylElement<CycloRing> specialize_element(const WeylElement<LiftRing>& a, const AlgebraPtr<CycloRing>& target) {
    const auto& field = target->ring().field;
    return map_coefficients(a, target, [&](const CycloLaurent& c) { return specialize(c, field); });
}

/// Coefficientwise t -> q for a numeric q.
inline WeylElement<NumericRing> specialize_element(const WeylElement<SymbolicRing>& a,
                                                   const AlgebraPtr<NumericRing>& target) {
    const auto q = target->ring().q;
    return map_coefficients(a, target, [&](const RationalLaurent& c) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t k = 0; k < c.coeffs().size(); ++k)
            acc += c.coeffs()[k].to_double() * std::pow(q, static_cast<double>(c.low_degree() + static_cast<long>(k)));
        return acc;
    });
}

/// Element of Q[t,t^-1] localized at (1 - t), kept as num / (1 - t)^k.
/// Only the f-divisibility test uses it.
struct LocalizedLaurent {
    RationalLaurent num;
    unsigned long k = 0;

    LocalizedLaurent& operator+=(const LocalizedLaurent& o) {
        const RationalLaurent one_minus_t = RationalLaurent(Rational(1)) - RationalLaurent::t(1);
        if (o.k > k) {
            num = num * one_minus_t.pow(o.k - k) + o.num;
            k = o.k;
        } else {
            num += o.num * one_minus_t.pow(k - o.k);
        }
        return *this;
    }
    bool is_zero() const { return num.is_zero(); }
};

/// Image of a in A_t / (f_i) tensored with R[(1-t)^-1]: x_i -> X, d_i -> (1-t)^-1 X^-1,
/// other pairs untouched. Keys are (X-exponent alpha_i - beta_i, remaining
/// exponents with pair i zeroed).
inline std::map<std::pair<long, std::vector<Monomial::exp_type>>, LocalizedLaurent> f_quotient_image(
    const WeylElement<SymbolicRing>& a, int i) {
    if (i < 1 || i > a.n())
        throw index_out_of_range("f index " + std::to_string(i) + " outside 1.." + std::to_string(a.n()));
    std::map<std::pair<long, std::vector<Monomial::exp_type>>, LocalizedLaurent> image;
    for (const auto& [m, c] : a.terms()) {
        const long x_exp = static_cast<long>(m.alpha(i - 1)) - static_cast<long>(m.beta(i - 1));
        auto rest = m.exponents();
        rest[static_cast<std::size_t>(i - 1)] = 0;
        rest[static_cast<std::size_t>(m.n() + i - 1)] = 0;
        image[{x_exp, rest}] += LocalizedLaurent{c, m.beta(i - 1)};
    }
    for (auto it = image.begin(); it != image.end();) {
        if (it->second.is_zero())
            it = image.erase(it);
        else
            ++it;
    }
    return image;
}

/// True iff a lies in the two-sided ideal generated by f_i.
inline bool divisible_by_f(const WeylElement<SymbolicRing>& a, int i) { return f_quotient_image(a, i).empty(); }

}  // namespace qweyl

#endif  // QWEYL_WEYL_HPP
