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

#ifndef QWEYL_LAURENT_HPP
#define QWEYL_LAURENT_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "scalar_text.hpp"

namespace qweyl {

/// Laurent polynomial in the single variable t with coefficients in C.
///
/// Dense storage: coeffs_[k] multiplies t^(low_ + k). Both ends are trimmed,
/// so the zero polynomial has no coefficients and equality is structural.
template <class C>
class LaurentPoly {
   public:
    using coeff_type = C;

    LaurentPoly() = default;
    LaurentPoly(const C& constant) {
        if (!qweyl::is_zero(constant)) coeffs_.push_back(constant);
    }
    LaurentPoly(int constant) : LaurentPoly(C(constant)) {}

    static LaurentPoly monomial(const C& c, long exponent) {
        LaurentPoly p(c);
        if (!p.coeffs_.empty()) p.low_ = exponent;
        return p;
    }
    static LaurentPoly t(long exponent = 1) { return monomial(C(1), exponent); }

    /// Builds sum coeffs[k] t^(low + k).
    static LaurentPoly from_coeffs(long low, std::vector<C> coeffs) {
        LaurentPoly p;
        p.low_ = low;
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.empty() || (coeffs_.size() == 1 && low_ == 0); }
    std::size_t term_count() const {
        return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(),
                                                      [](const C& c) { return !qweyl::is_zero(c); }));
    }
    long low_degree() const noexcept { return low_; }
    long high_degree() const noexcept { return low_ + static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<C>& coeffs() const noexcept { return coeffs_; }

    C coeff(long e) const {
        if (coeffs_.empty() || e < low_ || e > high_degree()) return C();
        return coeffs_[static_cast<std::size_t>(e - low_)];
    }
    C constant_term() const { return coeff(0); }

    LaurentPoly operator-() const {
        LaurentPoly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return add_scaled(o, false); }
    LaurentPoly& operator-=(const LaurentPoly& o) { return add_scaled(o, true); }

    LaurentPoly& operator*=(const LaurentPoly& o) {
        *this = *this * o;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (b.coeffs_.size() == 1) return a.scaled_shifted(b.coeffs_[0], b.low_);
        if (a.coeffs_.size() == 1) return b.scaled_shifted(a.coeffs_[0], a.low_);
        std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (qweyl::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (qweyl::is_zero(b.coeffs_[j])) continue;
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return from_coeffs(a.low_ + b.low_, std::move(out));
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }

    /// c * t^shift * this
    LaurentPoly scaled_shifted(const C& c, long shift) const {
        if (qweyl::is_zero(c) || is_zero()) return {};
        LaurentPoly r;
        r.low_ = low_ + shift;
        r.coeffs_.reserve(coeffs_.size());
        for (const auto& x : coeffs_) r.coeffs_.push_back(x * c);
        r.trim();
        return r;
    }

    LaurentPoly pow(unsigned long e) const {
        LaurentPoly r(C(1)), b(*this);
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    /// Horner evaluation at an invertible point; V must be a ring containing C.
    template <class V>
    V evaluate(const V& x) const {
        V acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + V(*it);
        if (low_ == 0 || is_zero()) return acc;
        V xp = V(1);
        const V base = low_ > 0 ? x : V(1) / x;
        for (long k = 0; k < (low_ > 0 ? low_ : -low_); ++k) xp = xp * base;
        return acc * xp;
    }

    /// Coefficientwise image under a ring map C -> D.
    template <class D, class F>
    LaurentPoly<D> map(F&& fn) const {
        std::vector<D> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(fn(c));
        return LaurentPoly<D>::from_coeffs(low_, std::move(out));
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (qweyl::is_zero(coeffs_[k])) continue;
            const long e = low_ + static_cast<long>(k);
            std::string c = to_text(coeffs_[k]);
            bool neg = false;
            if (e != 0) {
                if (!detail::is_single_term(c)) {
                    c = "(" + c + ")";
                } else if (c[0] == '-') {
                    neg = true;
                    c.erase(0, 1);
                }
                std::string mono = var;
                if (e != 1) mono += "^" + std::to_string(e);
                c = (c == "1") ? mono : c + "*" + mono;
            } else if (c[0] == '-' && detail::is_single_term(c)) {
                neg = true;
                c.erase(0, 1);
            }
            if (out.empty())
                out = neg ? "-" + c : c;
            else
                out += (neg ? " - " : " + ") + c;
        }
        return out;
    }

   private:
    LaurentPoly& add_scaled(const LaurentPoly& o, bool negate) {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            *this = negate ? -o : o;
            return *this;
        }
        const long lo = std::min(low_, o.low_);
        const long hi = std::max(high_degree(), o.high_degree());
        if (lo < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), C());
        low_ = lo;
        coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
            auto& dst = coeffs_[static_cast<std::size_t>(o.low_ - lo) + k];
            if (negate)
                dst -= o.coeffs_[k];
            else
                dst += o.coeffs_[k];
        }
        trim();
        return *this;
    }

    void trim() {
        std::size_t b = 0;
        while (b < coeffs_.size() && qweyl::is_zero(coeffs_[b])) ++b;
        if (b == coeffs_.size()) {
            coeffs_.clear();
            low_ = 0;
            return;
        }
        std::size_t e = coeffs_.size();
        while (qweyl::is_zero(coeffs_[e - 1])) --e;
        coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(e), coeffs_.end());
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(b));
        low_ += static_cast<long>(b);
    }

    long low_ = 0;
    std::vector<C> coeffs_;
};


}  // namespace qweyl

#endif  // QWEYL_LAURENT_HPP
