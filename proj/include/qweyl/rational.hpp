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

#ifndef QWEYL_RATIONAL_HPP
#define QWEYL_RATIONAL_HPP

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace qweyl {

/// Exact rational number.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are kept
/// inline; anything larger is promoted to a GMP mpq and demoted again as soon as
/// it fits. The coefficient arithmetic of PBW expansions at roots of unity is
/// overwhelmingly small-integer, so the inline path carries almost all work.
///
/// Invariant: den > 0 and gcd(num, den) = 1 in either representation; the
/// inline numerator is never INT64_MIN (so negation cannot overflow).
class Rational {
    using i64 = std::int64_t;
    using i128 = __int128;
    using u128 = unsigned __int128;

   public:
    Rational() noexcept = default;
    Rational(int v) noexcept : num_(v) {}
    Rational(long v) { set_i128(v, 1); }
    Rational(long long v) { set_i128(v, 1); }
    Rational(i64 num, i64 den) {
        if (den == 0) throw domain_error("rational with zero denominator");
        set_i128(num, den);
    }
    explicit Rational(const mpq_class& q) { set_big(q); }
    explicit Rational(const mpz_class& z) { set_big(mpq_class(z)); }

    Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    /// Parses "INT" or "INT/INT" (optional leading '-').
    static Rational parse(std::string_view s) {
        std::string str(s);
        mpq_class q;
        if (str.empty() || q.set_str(str, 10) != 0) throw domain_error("malformed rational '" + str + "'");
        if (q.get_den() == 0) throw domain_error("rational with zero denominator");
        q.canonicalize();
        return Rational(q);
    }

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const noexcept { return big_ ? big_->get_den() == 1 : den_ == 1; }
    bool is_small() const noexcept { return !big_; }
    int sign() const noexcept { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }

    mpq_class to_mpq() const {
        if (big_) return *big_;
        mpq_class q;
        mpz_set_si(q.get_num_mpz_t(), num_);
        mpz_set_si(q.get_den_mpz_t(), den_);
        return q;
    }
    mpz_class numerator() const { return to_mpq().get_num(); }
    mpz_class denominator() const { return to_mpq().get_den(); }

    double to_double() const {
        if (big_) return big_->get_d();
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::string str() const {
        if (big_) return big_->get_str();
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    Rational operator-() const {
        Rational r(*this);
        if (r.big_)
            *r.big_ = -*r.big_;
        else
            r.num_ = -r.num_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        if (!big_ && !o.big_) {
            if (den_ == 1 && o.den_ == 1) {
                i64 s;
                if (!__builtin_add_overflow(num_, o.num_, &s) && s != kMin) {
                    num_ = s;
                    return *this;
                }
                set_i128(i128(num_) + o.num_, 1);
                return *this;
            }
            if (den_ == o.den_) {
                set_i128(i128(num_) + o.num_, den_);
                return *this;
            }
            // Both denominators are < 2^63 so their product fits in 127 bits;
            // the cross terms are bounded by 2^126 each.
            i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
            i128 d = i128(den_) * o.den_;
            set_i128(n, d);
            return *this;
        }
        set_big(to_mpq() + o.to_mpq());
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }

    Rational& operator*=(const Rational& o) {
        if (!big_ && !o.big_) {
            if (den_ == 1 && o.den_ == 1) {
                i64 p;
                if (!__builtin_mul_overflow(num_, o.num_, &p) && p != kMin) {
                    num_ = p;
                    return *this;
                }
                set_i128(i128(num_) * o.num_, 1);
                return *this;
            }
            const i64 g1 = gcd64(abs64(num_), o.den_);
            const i64 g2 = gcd64(abs64(o.num_), den_);
            const i128 n = i128(num_ / g1) * (o.num_ / g2);
            const i128 d = i128(den_ / g2) * (o.den_ / g1);
            set_reduced_i128(n, d);
            return *this;
        }
        set_big(to_mpq() * o.to_mpq());
        return *this;
    }

    Rational inverse() const {
        if (is_zero()) throw domain_error("division by zero");
        if (big_) return Rational(mpq_class(1) / *big_);
        Rational r;
        r.num_ = num_ < 0 ? -den_ : den_;
        r.den_ = abs64(num_);
        return r;
    }
    Rational& operator/=(const Rational& o) { return *this *= o.inverse(); }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;  // a canonical big value never fits inline
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            const i128 l = i128(a.num_) * b.den_, r = i128(b.num_) * a.den_;
            return l <=> r;
        }
        const int c = cmp(a.to_mpq(), b.to_mpq());
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// Integer power; negative exponents invert.
    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational r(1), b(*this);
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    /// Exact k-th root if this is a k-th power in Q.
    bool exact_root(unsigned long k, Rational& out) const {
        if (k == 0) return false;
        mpq_class q = to_mpq();
        if (sgn(q) < 0 && k % 2 == 0) return false;
        mpz_class n = q.get_num(), d = q.get_den(), rn, rd;
        const bool neg = sgn(n) < 0;
        if (neg) n = -n;
        if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k)) return false;
        if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k)) return false;
        if (neg) rn = -rn;
        out = Rational(mpq_class(rn, rd));
        return true;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

   private:
    static constexpr i64 kMin = std::numeric_limits<i64>::min();
    static constexpr i64 kMax = std::numeric_limits<i64>::max();

    static i64 abs64(i64 v) noexcept { return v < 0 ? -v : v; }
    static i64 gcd64(i64 a, i64 b) noexcept {
        while (b) {
            const i64 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }
    static u128 gcd128(u128 a, u128 b) noexcept {
        while (b) {
            const u128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }
    static bool fits(i128 v) noexcept { return v > i128(kMin) && v <= i128(kMax); }

    static mpz_class to_mpz(i128 v) {
        const bool neg = v < 0;
        u128 u = neg ? u128(-(v + 1)) + 1 : u128(v);
        mpz_class hi, lo;
        mpz_set_ui(hi.get_mpz_t(), static_cast<unsigned long>(u >> 64));
        mpz_set_ui(lo.get_mpz_t(), static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
        mpz_class z = (hi << 64) + lo;
        return neg ? mpz_class(-z) : z;
    }

    void set_i128(i128 n, i128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            big_.reset();
            num_ = 0;
            den_ = 1;
            return;
        }
        if (d != 1) {
            const u128 g = gcd128(n < 0 ? u128(-(n + 1)) + 1 : u128(n), u128(d));
            n /= i128(g);
            d /= i128(g);
        }
        set_reduced_i128(n, d);
    }

    void set_reduced_i128(i128 n, i128 d) {
        if (n == 0) d = 1;
        if (fits(n) && fits(d)) {
            big_.reset();
            num_ = static_cast<i64>(n);
            den_ = static_cast<i64>(d);
            return;
        }
        mpq_class q(to_mpz(n), to_mpz(d));
        q.canonicalize();
        set_big(q);
    }

    void set_big(const mpq_class& q) {
        if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
            const long n = mpz_get_si(q.get_num_mpz_t());
            if (n != kMin) {
                big_.reset();
                num_ = n;
                den_ = mpz_get_si(q.get_den_mpz_t());
                return;
            }
        }
        big_ = std::make_unique<mpq_class>(q);
        num_ = 0;
        den_ = 1;
    }

    i64 num_ = 0;
    i64 den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

}  // namespace qweyl

#endif  // QWEYL_RATIONAL_HPP
