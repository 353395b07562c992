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

#ifndef QWEYL_CYCLO_HPP
#define QWEYL_CYCLO_HPP

#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <numbers>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "scalar_text.hpp"

namespace qweyl {

namespace upoly {

// Dense univariate polynomials over Q, lowest degree first, trailing zeros
// trimmed. Only what the cyclotomic field needs.
using Poly = std::vector<Rational>;

inline void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

/// Quotient and remainder of a by nonzero b.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    trim(a);
    if (b.empty()) throw domain_error("polynomial division by zero");
    if (a.size() < b.size()) return {Poly{}, a};
    Poly q(a.size() - b.size() + 1);
    const Rational lead_inv = b.back().inverse();
    for (std::size_t k = a.size(); k-- >= b.size();) {
        if (a[k].is_zero()) continue;
        const Rational c = a[k] * lead_inv;
        const std::size_t shift = k - (b.size() - 1);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    }
    trim(q);
    trim(a);
    return {q, a};
}

}  // namespace upoly

/// Coefficients (lowest first) of the l-th cyclotomic polynomial, obtained by
/// dividing z^l - 1 by Phi_d for every proper divisor d of l.
inline std::vector<long> cyclotomic_polynomial(int l) {
    if (l < 1) throw domain_error("cyclotomic level must be positive");
    upoly::Poly num(static_cast<std::size_t>(l) + 1);
    num[0] = Rational(-1);
    num[static_cast<std::size_t>(l)] = Rational(1);
    for (int d = 1; d < l; ++d) {
        if (l % d != 0) continue;
        const auto phi_d = cyclotomic_polynomial(d);
        upoly::Poly den;
        for (long c : phi_d) den.emplace_back(c);
        auto [q, r] = upoly::divmod(num, den);
        if (!r.empty()) throw domain_error("cyclotomic division left a remainder");
        num = std::move(q);
    }
    std::vector<long> out;
    for (const auto& c : num) {
        if (!c.is_integer()) throw domain_error("non-integral cyclotomic coefficient");
        out.push_back(mpz_get_si(c.numerator().get_mpz_t()));
    }
    return out;
}

/// Working precision of the complex embedding. Exact coefficients of large
/// level carry big cancelling terms, so doubles are not enough.
using HighFloat = boost::multiprecision::cpp_bin_float_50;

inline HighFloat to_high(const Rational& r) {
    if (r.is_small()) {
        const mpq_class q = r.to_mpq();
        return HighFloat(q.get_num().get_si()) / HighFloat(q.get_den().get_si());
    }
    const mpq_class q = r.to_mpq();
    return HighFloat(q.get_num().get_str()) / HighFloat(q.get_den().get_str());
}

/// The field Q(zeta_l) presented as Q[z]/(Phi_l(z)), with zeta_l embedded as
/// exp(2 pi i / l).
class CycloField {
   public:
    explicit CycloField(int level) : level_(level), modulus_(cyclotomic_polynomial(level)) {
        degree_ = static_cast<int>(modulus_.size()) - 1;
        powers_.reserve(static_cast<std::size_t>(level_));
        for (int k = 0; k < level_; ++k) {
            const long double angle = 2.0L * std::numbers::pi_v<long double> * k / level_;
            powers_.emplace_back(static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle)));
        }
    }

    static std::shared_ptr<const CycloField> make(int level) { return std::make_shared<const CycloField>(level); }

    int level() const noexcept { return level_; }
    /// Euler phi of the level.
    int degree() const noexcept { return degree_; }
    const std::vector<long>& modulus() const noexcept { return modulus_; }

    /// exp(2 pi i k / l) for any integer k.
    std::complex<double> root_power(long k) const {
        long r = k % level_;
        if (r < 0) r += level_;
        return powers_[static_cast<std::size_t>(r)];
    }

    /// High-precision cos and sin of 2 pi k / l, 0 <= k < l.
    const std::vector<std::pair<HighFloat, HighFloat>>& precise_powers() const {
        std::call_once(precise_once_, [this] {
            const HighFloat two_pi = 2 * boost::math::constants::pi<HighFloat>();
            precise_.reserve(static_cast<std::size_t>(level_));
            for (int k = 0; k < level_; ++k) {
                const HighFloat angle = two_pi * k / level_;
                precise_.emplace_back(cos(angle), sin(angle));
            }
        });
        return precise_;
    }

    /// Reduces a coefficient vector modulo Phi_l in place.
    void reduce(std::vector<Rational>& p) const {
        const std::size_t deg = static_cast<std::size_t>(degree_);
        for (std::size_t k = p.size(); k-- > deg;) {
            if (p[k].is_zero()) continue;
            const Rational c = std::move(p[k]);
            p[k] = Rational();
            const std::size_t shift = k - deg;
            for (std::size_t j = 0; j < deg; ++j) {
                const long m = modulus_[j];
                if (m == 0) continue;
                if (m == 1)
                    p[shift + j] -= c;
                else if (m == -1)
                    p[shift + j] += c;
                else
                    p[shift + j] -= c * Rational(m);
            }
        }
        upoly::trim(p);
    }

    friend bool operator==(const CycloField& a, const CycloField& b) { return a.level_ == b.level_; }

   private:
    int level_;
    int degree_ = 0;
    std::vector<long> modulus_;
    std::vector<std::complex<double>> powers_;
    mutable std::once_flag precise_once_;
    mutable std::vector<std::pair<HighFloat, HighFloat>> precise_;
};

using FieldPtr = std::shared_ptr<const CycloField>;

/// Element of Q(zeta_l) as a residue polynomial of degree < phi(l).
///
/// A value carrying no field is a rational constant; it combines with an
/// element of any level and adopts that level.
class Cyclo {
   public:
    Cyclo() = default;
    Cyclo(int v) : Cyclo(Rational(v)) {}
    Cyclo(const Rational& r) {
        if (!r.is_zero()) coeffs_.push_back(r);
    }
    Cyclo(FieldPtr field, const Rational& r) : Cyclo(r) { field_ = std::move(field); }

    /// zeta_l^k (k may be negative).
    static Cyclo root_power(const FieldPtr& field, long k) {
        const long l = field->level();
        long r = k % l;
        if (r < 0) r += l;
        std::vector<Rational> p(static_cast<std::size_t>(r) + 1);
        p.back() = Rational(1);
        return from_coeffs(field, std::move(p));
    }
    static Cyclo zeta(const FieldPtr& field) { return root_power(field, 1); }

    /// sum coeffs[k] z^k, reduced.
    static Cyclo from_coeffs(FieldPtr field, std::vector<Rational> coeffs) {
        Cyclo c;
        c.field_ = std::move(field);
        c.coeffs_ = std::move(coeffs);
        if (c.field_)
            c.field_->reduce(c.coeffs_);
        else
            upoly::trim(c.coeffs_);
        if (!c.field_ && c.coeffs_.size() > 1) throw domain_error("cyclotomic element without a level");
        return c;
    }

    const FieldPtr& field() const noexcept { return field_; }
    int level() const noexcept { return field_ ? field_->level() : 0; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_rational() const noexcept { return coeffs_.size() <= 1; }
    Rational rational_value() const { return coeffs_.empty() ? Rational() : coeffs_[0]; }

    Cyclo operator-() const {
        Cyclo r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Cyclo& operator+=(const Cyclo& o) {
        adopt(o);
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        upoly::trim(coeffs_);
        return *this;
    }
    Cyclo& operator-=(const Cyclo& o) {
        adopt(o);
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        upoly::trim(coeffs_);
        return *this;
    }
    Cyclo& operator*=(const Cyclo& o) {
        adopt(o);
        if (is_zero()) return *this;
        if (o.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        if (o.coeffs_.size() == 1) {
            if (!o.coeffs_[0].is_one())
                for (auto& c : coeffs_) c *= o.coeffs_[0];
            return *this;
        }
        if (coeffs_.size() == 1) {
            const Rational s = coeffs_[0];
            coeffs_ = o.coeffs_;
            if (!s.is_one())
                for (auto& c : coeffs_) c *= s;
            return *this;
        }
        std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
                if (o.coeffs_[j].is_zero()) continue;
                out[i + j] += coeffs_[i] * o.coeffs_[j];
            }
        }
        field_->reduce(out);
        coeffs_ = std::move(out);
        return *this;
    }

    /// Field inverse via the extended Euclidean algorithm against Phi_l.
    Cyclo inverse() const {
        if (is_zero()) throw domain_error("inverse of zero in cyclotomic field");
        if (is_rational()) {
            Cyclo r(coeffs_[0].inverse());
            r.field_ = field_;
            return r;
        }
        upoly::Poly r0, r1 = coeffs_;
        for (long c : field_->modulus()) r0.emplace_back(c);
        upoly::Poly s0, s1{Rational(1)};  // invariant: s_i * self == r_i (mod Phi)
        while (r1.size() > 1) {
            auto [q, rem] = upoly::divmod(r0, r1);
            upoly::Poly s2 = upoly::sub(s0, upoly::mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r1.empty()) throw domain_error("cyclotomic element not invertible");
        const Rational k = r1[0].inverse();
        for (auto& c : s1) c *= k;
        return from_coeffs(field_, std::move(s1));
    }
    Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
    friend bool operator==(const Cyclo& a, const Cyclo& b) {
        if (a.coeffs_.size() > 1 && b.coeffs_.size() > 1 && a.level() != b.level()) return false;
        return a.coeffs_ == b.coeffs_;
    }

    Cyclo pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclo r(field_, Rational(1)), b(*this);
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    /// Image under zeta_l -> exp(2 pi i / l), accumulated in HighFloat.
    std::pair<HighFloat, HighFloat> embed_precise() const {
        HighFloat re = 0, im = 0;
        if (coeffs_.empty()) return {re, im};
        if (!field_) return {to_high(coeffs_[0]), im};
        const auto& roots = field_->precise_powers();
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k].is_zero()) continue;
            const HighFloat c = to_high(coeffs_[k]);
            re += c * roots[k].first;
            im += c * roots[k].second;
        }
        return {re, im};
    }

    std::complex<double> embed() const {
        if (coeffs_.empty()) return {0.0, 0.0};
        if (!field_ || coeffs_.size() == 1) return {coeffs_[0].to_double(), 0.0};
        const auto [re, im] = embed_precise();
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    /// Residue polynomial written in the variable var ("q" by default).
    std::string str(const std::string& var = "q") const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k].is_zero()) continue;
            Rational c = coeffs_[k];
            const bool neg = c.sign() < 0;
            if (neg) c = -c;
            std::string term;
            if (k == 0) {
                term = c.str();
            } else {
                std::string mono = var + (k == 1 ? "" : "^" + std::to_string(k));
                term = c.is_one() ? mono : c.str() + "*" + mono;
            }
            if (out.empty())
                out = neg ? "-" + term : term;
            else
                out += (neg ? " - " : " + ") + term;
        }
        return out;
    }

   private:
    void adopt(const Cyclo& o) {
        if (!o.field_) return;
        if (!field_) {
            field_ = o.field_;
            return;
        }
        if (field_ != o.field_ && field_->level() != o.field_->level())
            throw context_mismatch("cyclotomic elements of levels " + std::to_string(field_->level()) + " and " +
                                   std::to_string(o.field_->level()));
    }

    FieldPtr field_;
    std::vector<Rational> coeffs_;
};


}  // namespace qweyl

#endif  // QWEYL_CYCLO_HPP
