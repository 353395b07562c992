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

#ifndef QWEYL_SCALARS_HPP
#define QWEYL_SCALARS_HPP

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclo.hpp"
#include "laurent.hpp"
#include "rational.hpp"

namespace qweyl {

using RationalLaurent = LaurentPoly<Rational>;
using CycloLaurent = LaurentPoly<Cyclo>;

/// Quantum integer [m]_t = 1 + t + ... + t^(m-1).
inline RationalLaurent qint(unsigned long m) {
    return RationalLaurent::from_coeffs(0, std::vector<Rational>(m, Rational(1)));
}

/// Quantum factorial [m]_t! = [m]_t [m-1]_t ... [1]_t.
inline RationalLaurent qfact(unsigned long m) {
    RationalLaurent r(Rational(1));
    for (unsigned long k = 2; k <= m; ++k) r *= qint(k);
    return r;
}

/// Evaluates p at t = zeta_l.
inline Cyclo specialize(const RationalLaurent& p, const FieldPtr& field) {
    const long l = field->level();
    std::vector<Rational> acc(static_cast<std::size_t>(l));
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        long e = (p.low_degree() + static_cast<long>(k)) % l;
        if (e < 0) e += l;
        acc[static_cast<std::size_t>(e)] += p.coeffs()[k];
    }
    return Cyclo::from_coeffs(field, std::move(acc));
}

inline Cyclo specialize(const RationalLaurent& p, int level) { return specialize(p, CycloField::make(level)); }

/// Evaluates p at t = zeta_l when the coefficients already live in Q(zeta_l).
inline Cyclo specialize(const CycloLaurent& p, const FieldPtr& field) {
    Cyclo acc(field, Rational());
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (p.coeffs()[k].is_zero()) continue;
        acc += p.coeffs()[k] * Cyclo::root_power(field, p.low_degree() + static_cast<long>(k));
    }
    return acc;
}

inline std::complex<double> embed(const Cyclo& c) { return c.embed(); }

/// Rational Laurent polynomial viewed over Q(zeta_l).
inline CycloLaurent lift_coefficients(const RationalLaurent& p, const FieldPtr& field) {
    return p.map<Cyclo>([&](const Rational& r) { return Cyclo(field, r); });
}

/// Exact quotient p / (t - root). Throws division_failure when p(root) != 0.
inline CycloLaurent exact_div(const CycloLaurent& p, const Cyclo& root) {
    if (p.is_zero()) return {};
    if (root.is_zero()) throw division_failure("division by t");
    // p = t^low * P(t) with P an ordinary polynomial; synthetic division of P.
    const auto& c = p.coeffs();
    const std::size_t deg = c.size() - 1;
    std::vector<Cyclo> q(deg);
    Cyclo carry;
    for (std::size_t k = deg + 1; k-- > 0;) {
        carry = carry * root + c[k];
        if (k > 0) q[k - 1] = carry;
    }
    if (!carry.is_zero())
        throw division_failure("polynomial does not vanish at the root; remainder " + carry.str());
    return CycloLaurent::from_coeffs(p.low_degree(), std::move(q));
}

/// specialize(exact_div(p, zeta), field) without forming the quotient.
///
/// With p = t^low P and S_k = sum_{j>=k} c_j zeta^j the synthetic-division
/// carries, the quotient at zeta is zeta^(low-1) sum_{k>=1} S_k, which
/// telescopes to zeta^(low-1) sum_j j c_j zeta^j. The remainder S_0 = P(zeta)
/// must vanish. Sums are kept modulo z^l - 1 and reduced once.
inline Cyclo quotient_at_root(const CycloLaurent& p, const FieldPtr& field) {
    if (p.is_zero()) return Cyclo(field, Rational());
    const auto l = static_cast<std::size_t>(field->level());
    std::vector<Rational> value(l), weighted(l);
    const auto& c = p.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
        const auto& cj = c[j].coeffs();
        const Rational jr(static_cast<long>(j));
        for (std::size_t i = 0; i < cj.size(); ++i) {
            if (cj[i].is_zero()) continue;
            const std::size_t slot = (i + j) % l;
            value[slot] += cj[i];
            if (j > 0) weighted[slot] += cj[i] * jr;
        }
    }
    const Cyclo rem = Cyclo::from_coeffs(field, std::move(value));
    if (!rem.is_zero())
        throw division_failure("polynomial does not vanish at the root; remainder " + rem.str());
    return Cyclo::from_coeffs(field, std::move(weighted)) * Cyclo::root_power(field, p.low_degree() - 1);
}

inline CycloLaurent exact_div(const RationalLaurent& p, const Cyclo& root) {
    if (!root.field()) return exact_div(p.map<Cyclo>([](const Rational& r) { return Cyclo(r); }), root);
    return exact_div(lift_coefficients(p, root.field()), root);
}

// ---------------------------------------------------------------------------
// Coefficient rings of the algebras. Each ring fixes the value type of PBW
// coefficients and the image of the deformation parameter t.

enum class ParamKind { Symbolic, RootOfUnity, Numeric, SymbolicOverCyclo };

/// Plain rationals; used for center polynomials given without a level.
struct RationalRing {
    using value_type = Rational;

    value_type from_rational(const Rational& r) const { return r; }
    value_type param_power(long k) const {
        if (k == 0) return Rational(1);
        throw domain_error("no deformation parameter over the rationals");
    }
    std::optional<value_type> named_scalar(std::string_view) const { return std::nullopt; }
    bool accepts_float() const { return false; }
    std::optional<value_type> invert_scalar(const value_type& v) const {
        if (v.is_zero()) return std::nullopt;
        return v.inverse();
    }
    std::string describe() const { return "Q"; }
    friend bool operator==(const RationalRing&, const RationalRing&) { return true; }
};

/// R = Q[t, t^-1]: the generic quantized Weyl algebra A_t.
struct SymbolicRing {
    using value_type = RationalLaurent;
    static constexpr ParamKind kind = ParamKind::Symbolic;

    value_type from_rational(const Rational& r) const { return value_type(r); }
    value_type param_power(long k) const { return value_type::t(k); }
    std::optional<value_type> named_scalar(std::string_view name) const {
        if (name == "t") return param_power(1);
        return std::nullopt;
    }
    bool accepts_float() const { return false; }
    std::optional<value_type> invert_scalar(const value_type& v) const {
        if (v.coeffs().size() != 1) return std::nullopt;
        return value_type::monomial(v.coeffs()[0].inverse(), -v.low_degree());
    }
    std::string describe() const { return "t"; }
    friend bool operator==(const SymbolicRing&, const SymbolicRing&) { return true; }
};

/// Q(zeta_l) with t specialized to q = zeta_l: the algebra A_q.
struct CycloRing {
    using value_type = Cyclo;
    static constexpr ParamKind kind = ParamKind::RootOfUnity;

    explicit CycloRing(FieldPtr f) : field(std::move(f)) {}
    explicit CycloRing(int level) : field(CycloField::make(level)) {}
    FieldPtr field;

    int level() const { return field->level(); }
    value_type from_rational(const Rational& r) const { return Cyclo(field, r); }
    value_type param_power(long k) const { return Cyclo::root_power(field, k); }
    std::optional<value_type> named_scalar(std::string_view name) const {
        if (name == "t" || name == "q") return param_power(1);
        return std::nullopt;
    }
    bool accepts_float() const { return false; }
    std::optional<value_type> invert_scalar(const value_type& v) const {
        if (v.is_zero()) return std::nullopt;
        return v.inverse();
    }
    std::string describe() const { return "l=" + std::to_string(level()); }
    friend bool operator==(const CycloRing& a, const CycloRing& b) { return a.level() == b.level(); }
};

/// Q(zeta_l)[t, t^-1]: the generic algebra with scalars extended so that
/// division by (t - zeta_l) is available.
struct LiftRing {
    using value_type = CycloLaurent;
    static constexpr ParamKind kind = ParamKind::SymbolicOverCyclo;

    explicit LiftRing(FieldPtr f) : field(std::move(f)) {}
    FieldPtr field;

    int level() const { return field->level(); }
    value_type from_rational(const Rational& r) const { return value_type(Cyclo(field, r)); }
    value_type param_power(long k) const { return value_type::monomial(Cyclo(field, Rational(1)), k); }
    std::optional<value_type> named_scalar(std::string_view name) const {
        if (name == "t") return param_power(1);
        if (name == "q") return value_type(Cyclo::zeta(field));
        return std::nullopt;
    }
    bool accepts_float() const { return false; }
    std::optional<value_type> invert_scalar(const value_type& v) const {
        if (v.coeffs().size() != 1) return std::nullopt;
        return value_type::monomial(v.coeffs()[0].inverse(), -v.low_degree());
    }
    std::string describe() const { return "t over l=" + std::to_string(level()); }
    friend bool operator==(const LiftRing& a, const LiftRing& b) { return a.level() == b.level(); }
};

/// Complex floating point with t specialized to a numeric q.
struct NumericRing {
    using value_type = std::complex<double>;
    static constexpr ParamKind kind = ParamKind::Numeric;

    explicit NumericRing(std::complex<double> qv) : q(qv) {}
    std::complex<double> q;

    value_type from_rational(const Rational& r) const { return {r.to_double(), 0.0}; }
    value_type param_power(long k) const { return std::pow(q, static_cast<double>(k)); }
    std::optional<value_type> named_scalar(std::string_view name) const {
        if (name == "t" || name == "q") return q;
        if (name == "i") return value_type(0.0, 1.0);
        return std::nullopt;
    }
    bool accepts_float() const { return true; }
    std::optional<value_type> invert_scalar(const value_type& v) const {
        if (qweyl::is_zero(v)) return std::nullopt;
        return 1.0 / v;
    }
    std::string describe() const { return "q=" + to_text(q); }
    friend bool operator==(const NumericRing& a, const NumericRing& b) { return a.q == b.q; }
};

/// [m] evaluated in the ring: 1 + p + ... + p^(m-1) for the ring's parameter p.
template <class Ring>
typename Ring::value_type ring_qint(const Ring& ring, unsigned long m) {
    typename Ring::value_type acc = ring.from_rational(Rational(0));
    for (unsigned long j = 0; j < m; ++j) acc += ring.param_power(static_cast<long>(j));
    return acc;
}

template <>
inline SymbolicRing::value_type ring_qint(const SymbolicRing&, unsigned long m) {
    return qint(m);
}

}  // namespace qweyl

#endif  // QWEYL_SCALARS_HPP
