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

#ifndef QWEYL_MORPHISMS_HPP
#define QWEYL_MORPHISMS_HPP

#include <cstdlib>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "weyl.hpp"

namespace qweyl {

/// Bound on the Bernstein degree apply() may produce; QWEYL_MAX_DEGREE
/// overrides the default of 512.
inline long default_degree_limit() {
    if (const char* env = std::getenv("QWEYL_MAX_DEGREE")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 512;
}

/// A defining relation together with its image under a candidate map.
template <class Ring>
struct Residual {
    std::string relation;
    WeylElement<Ring> value;
};

/// Images of the 2n generators. make() checks the defining relations and
/// records the outcome; apply() refuses maps that failed.
template <class Ring>
class Endomorphism {
   public:
    using element_type = WeylElement<Ring>;

    static Endomorphism make(AlgebraPtr<Ring> alg, std::vector<element_type> images_x,
                             std::vector<element_type> images_d) {
        const auto n = static_cast<std::size_t>(alg->n());
        if (images_x.size() != n || images_d.size() != n)
            throw context_mismatch("expected " + std::to_string(n) + " images of each kind");
        for (const auto* v : {&images_x, &images_d})
            for (const auto& e : *v)
                if (e.algebra() && !(*e.algebra() == *alg)) throw context_mismatch("image lives in another algebra");
        Endomorphism e;
        e.alg_ = std::move(alg);
        e.x_ = std::move(images_x);
        e.d_ = std::move(images_d);
        for (auto& v : e.x_)
            if (!v.algebra()) v = element_type(e.alg_);
        for (auto& v : e.d_)
            if (!v.algebra()) v = element_type(e.alg_);
        e.residuals_ = e.compute_residuals();
        return e;
    }

    static Endomorphism identity(const AlgebraPtr<Ring>& alg) {
        std::vector<element_type> xs, ds;
        for (int i = 1; i <= alg->n(); ++i) {
            xs.push_back(element_type::x(alg, i));
            ds.push_back(element_type::d(alg, i));
        }
        return make(alg, std::move(xs), std::move(ds));
    }

    const AlgebraPtr<Ring>& algebra() const noexcept { return alg_; }
    int n() const { return alg_->n(); }
    const std::vector<element_type>& images_x() const noexcept { return x_; }
    const std::vector<element_type>& images_d() const noexcept { return d_; }
    const element_type& image_x(int i) const { return x_.at(static_cast<std::size_t>(i - 1)); }
    const element_type& image_d(int i) const { return d_.at(static_cast<std::size_t>(i - 1)); }

    bool validated() const noexcept { return residuals_.empty(); }
    /// Relations whose image is nonzero.
    const std::vector<Residual<Ring>>& residuals() const noexcept { return residuals_; }

    /// Largest Bernstein degree among the images (0 for scalar images).
    long max_image_degree() const {
        long d = 0;
        for (const auto* v : {&x_, &d_})
            for (const auto& e : *v)
                if (!e.is_zero()) d = std::max(d, bernstein_degree(e));
        return d;
    }

    friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
        return *a.alg_ == *b.alg_ && a.x_ == b.x_ && a.d_ == b.d_;
    }

   private:
    std::vector<Residual<Ring>> compute_residuals() const {
        const int n = alg_->n();
        const auto& ring = alg_->ring();
        ReorderTable<Ring> table(ring);
        const auto one = element_type::one(alg_);
        const auto t = ring.param_power(1);
        std::vector<Residual<Ring>> out;
        auto record = [&](std::string name, element_type v) {
            if (!v.is_zero()) out.push_back({std::move(name), std::move(v)});
        };
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const auto& di = d_[static_cast<std::size_t>(i)];
                const auto& xj = x_[static_cast<std::size_t>(j)];
                auto r = mul(di, xj, table);
                if (i == j) {
                    r -= mul(xj, di, table).scaled(t);
                    r -= one;
                    record("d" + std::to_string(i + 1) + "*x" + std::to_string(j + 1) + " - t*x" +
                               std::to_string(j + 1) + "*d" + std::to_string(i + 1) + " - 1",
                           std::move(r));
                } else {
                    r -= mul(xj, di, table);
                    record("d" + std::to_string(i + 1) + "*x" + std::to_string(j + 1) + " - x" +
                               std::to_string(j + 1) + "*d" + std::to_string(i + 1),
                           std::move(r));
                }
            }
        }
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const auto si = std::to_string(i + 1), sj = std::to_string(j + 1);
                const auto& xi = x_[static_cast<std::size_t>(i)];
                const auto& xj = x_[static_cast<std::size_t>(j)];
                record("x" + si + "*x" + sj + " - x" + sj + "*x" + si, mul(xi, xj, table) - mul(xj, xi, table));
                const auto& di = d_[static_cast<std::size_t>(i)];
                const auto& dj = d_[static_cast<std::size_t>(j)];
                record("d" + si + "*d" + sj + " - d" + sj + "*d" + si, mul(di, dj, table) - mul(dj, di, table));
            }
        }
        return out;
    }

    AlgebraPtr<Ring> alg_;
    std::vector<element_type> x_, d_;
    std::vector<Residual<Ring>> residuals_;
};

/// Relation residuals of the map given by the images (empty when valid).
template <class Ring>
std::vector<Residual<Ring>> validate(const Endomorphism<Ring>& e) {
    return e.residuals();
}

/// Image of a: each x^alpha d^beta becomes X_1^alpha_1 ... X_n^alpha_n D_1^beta_1 ... D_n^beta_n.
template <class Ring>
WeylElement<Ring> apply(const Endomorphism<Ring>& e, const WeylElement<Ring>& a, long max_degree = default_degree_limit()) {
    if (!e.validated()) throw domain_error("endomorphism does not preserve the defining relations");
    a.require_same(WeylElement<Ring>(e.algebra()));
    const int n = e.n();
    std::vector<long> dx(static_cast<std::size_t>(n)), dd(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& X = e.images_x()[static_cast<std::size_t>(i)];
        const auto& D = e.images_d()[static_cast<std::size_t>(i)];
        dx[static_cast<std::size_t>(i)] = X.is_zero() ? 0 : bernstein_degree(X);
        dd[static_cast<std::size_t>(i)] = D.is_zero() ? 0 : bernstein_degree(D);
    }
    for (const auto& [m, c] : a.terms()) {
        long deg = 0;
        for (int i = 0; i < n; ++i)
            deg += static_cast<long>(m.alpha(i)) * dx[static_cast<std::size_t>(i)] +
                   static_cast<long>(m.beta(i)) * dd[static_cast<std::size_t>(i)];
        if (deg > max_degree)
            throw degree_limit_exceeded("substituted degree " + std::to_string(deg) + " exceeds the bound " +
                                        std::to_string(max_degree));
    }

    ReorderTable<Ring> table(e.algebra()->ring());
    // powers[k][i][p] = (image k of index i)^p, k = 0 for x and 1 for d
    std::map<std::tuple<int, int, unsigned>, WeylElement<Ring>> powers;
    auto pw = [&](int kind, int i, unsigned p) -> const WeylElement<Ring>& {
        const auto key = std::make_tuple(kind, i, p);
        if (auto it = powers.find(key); it != powers.end()) return it->second;
        const auto& base = kind == 0 ? e.images_x()[static_cast<std::size_t>(i)] : e.images_d()[static_cast<std::size_t>(i)];
        return powers.emplace(key, power(base, p, table)).first->second;
    };

    auto result = WeylElement<Ring>::zero(e.algebra());
    for (const auto& [m, c] : a.terms()) {
        auto prod = WeylElement<Ring>::scalar(e.algebra(), c);
        for (int i = 0; i < n; ++i)
            if (m.alpha(i)) prod = mul(prod, pw(0, i, m.alpha(i)), table);
        for (int i = 0; i < n; ++i)
            if (m.beta(i)) prod = mul(prod, pw(1, i, m.beta(i)), table);
        result += prod;
    }
    return result;
}

/// e1 after e2: generator images apply(e1, e2(g)).
template <class Ring>
Endomorphism<Ring> compose(const Endomorphism<Ring>& e1, const Endomorphism<Ring>& e2) {
    if (!(*e1.algebra() == *e2.algebra())) throw context_mismatch("endomorphisms of different algebras");
    std::vector<WeylElement<Ring>> xs, ds;
    for (const auto& v : e2.images_x()) xs.push_back(apply(e1, v));
    for (const auto& v : e2.images_d()) ds.push_back(apply(e1, v));
    return Endomorphism<Ring>::make(e1.algebra(), std::move(xs), std::move(ds));
}

/// The same map at t = zeta_l; validity is re-checked there.
inline Endomorphism<CycloRing> specialize(const Endomorphism<SymbolicRing>& e, const AlgebraPtr<CycloRing>& target) {
    std::vector<WeylElement<CycloRing>> xs, ds;
    for (const auto& v : e.images_x()) xs.push_back(specialize_element(v, target));
    for (const auto& v : e.images_d()) ds.push_back(specialize_element(v, target));
    return Endomorphism<CycloRing>::make(target, std::move(xs), std::move(ds));
}

/// Character x_i -> a_i, d_i -> (1-q)^-1 a_i^-1 of A_q^n, as a map with scalar images.
inline Endomorphism<CycloRing> one_dim_rep(const std::vector<Cyclo>& a, const AlgebraPtr<CycloRing>& alg) {
    if (static_cast<int>(a.size()) != alg->n()) throw context_mismatch("one value per variable pair expected");
    const auto& field = alg->ring().field;
    const Cyclo one(field, Rational(1));
    const Cyclo inv = (one - Cyclo::zeta(field)).inverse();
    std::vector<WeylElement<CycloRing>> xs, ds;
    for (const auto& v : a) {
        if (v.is_zero()) throw domain_error("character values must be nonzero");
        xs.push_back(WeylElement<CycloRing>::scalar(alg, v * one));
        ds.push_back(WeylElement<CycloRing>::scalar(alg, inv * v.inverse()));
    }
    return Endomorphism<CycloRing>::make(alg, std::move(xs), std::move(ds));
}

namespace detail {

inline void require_single_pair(const AlgebraPtr<SymbolicRing>& alg) {
    if (alg->n() != 1) throw domain_error("the generator lifts are defined for one variable pair");
}

}  // namespace detail

/// x -> x, d -> d + F(x) f for F a polynomial in x.
inline Endomorphism<SymbolicRing> lift_phi(const WeylElement<SymbolicRing>& F, const AlgebraPtr<SymbolicRing>& alg) {
    detail::require_single_pair(alg);
    for (const auto& [m, c] : F.terms())
        if (m.beta(0) != 0) throw domain_error("lift_phi expects a polynomial in x only");
    auto x = WeylElement<SymbolicRing>::x(alg, 1);
    auto d = WeylElement<SymbolicRing>::d(alg, 1);
    auto e = Endomorphism<SymbolicRing>::make(alg, {x}, {d + mul(F, f_element(alg))});
    if (!e.validated()) throw domain_error("lift_phi failed validation");
    return e;
}

/// x -> x + f G(d), d -> d for G a polynomial in d.
inline Endomorphism<SymbolicRing> lift_psi(const WeylElement<SymbolicRing>& G, const AlgebraPtr<SymbolicRing>& alg) {
    detail::require_single_pair(alg);
    for (const auto& [m, c] : G.terms())
        if (m.alpha(0) != 0) throw domain_error("lift_psi expects a polynomial in d only");
    auto x = WeylElement<SymbolicRing>::x(alg, 1);
    auto d = WeylElement<SymbolicRing>::d(alg, 1);
    auto e = Endomorphism<SymbolicRing>::make(alg, {x + mul(f_element(alg), G)}, {d});
    if (!e.validated()) throw domain_error("lift_psi failed validation");
    return e;
}

/// F = lambda x^m.
inline Endomorphism<SymbolicRing> lift_phi(const Rational& lambda, unsigned m, const AlgebraPtr<SymbolicRing>& alg) {
    Monomial mono(1);
    mono.alpha(0) = m;
    return lift_phi(WeylElement<SymbolicRing>::term(alg, mono, RationalLaurent(lambda)), alg);
}

/// G = lambda d^m.
inline Endomorphism<SymbolicRing> lift_psi(const Rational& lambda, unsigned m, const AlgebraPtr<SymbolicRing>& alg) {
    Monomial mono(1);
    mono.beta(0) = m;
    return lift_psi(WeylElement<SymbolicRing>::term(alg, mono, RationalLaurent(lambda)), alg);
}

}  // namespace qweyl

#endif  // QWEYL_MORPHISMS_HPP
