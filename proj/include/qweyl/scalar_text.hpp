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

#ifndef QWEYL_SCALAR_TEXT_HPP
#define QWEYL_SCALAR_TEXT_HPP

// Zero tests and canonical text for the primitive coefficient types. Every
// coefficient type C used in a LaurentPoly or WeylElement provides
//   bool is_zero(const C&)   and   std::string to_text(const C&)
// where to_text yields a sum of terms in the expression grammar.

#include <charconv>
#include <complex>
#include <concepts>
#include <string>

#include "rational.hpp"

namespace qweyl {

template <class T>
    requires requires(const T& v) { { v.is_zero() } -> std::convertible_to<bool>; }
bool is_zero(const T& v) {
    return v.is_zero();
}

template <class T>
    requires requires(const T& v) { { v.str() } -> std::convertible_to<std::string>; }
std::string to_text(const T& v) {
    return v.str();
}

inline bool is_zero(const std::complex<double>& z) { return z.real() == 0.0 && z.imag() == 0.0; }

/// Shortest round-trip decimal form of a double.
inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    std::string s(buf, res.ptr);
    // keep a float literal recognisable as one
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

inline std::string to_text(const std::complex<double>& z) {
    const double re = z.real(), im = z.imag();
    if (im == 0.0) return format_double(re);
    std::string imag = (std::abs(im) == 1.0) ? "i" : format_double(std::abs(im)) + "*i";
    if (re == 0.0) return (im < 0 ? "-" : "") + imag;
    return format_double(re) + (im < 0 ? " - " : " + ") + imag;
}

namespace detail {

/// True when text produced by to_text is a single signed term, i.e. it needs no
/// parentheses when used as a factor.
inline bool is_single_term(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && i > 0 && (c == '+' || c == '-') && s[i - 1] == ' ') return false;
    }
    return true;
}

}  // namespace detail

}  // namespace qweyl

#endif  // QWEYL_SCALAR_TEXT_HPP
