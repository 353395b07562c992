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

#ifndef QWEYL_ERRORS_HPP
#define QWEYL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qweyl {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different algebras (different n or parameter).
class context_mismatch : public error {
   public:
    using error::error;
};

class index_out_of_range : public error {
   public:
    using error::error;
};

/// An element expected to be central is not, or is not in the image of theta.
class not_central : public error {
   public:
    using error::error;
};

/// Exact division by (t - root) left a nonzero remainder.
class division_failure : public error {
   public:
    using error::error;
};

/// Text that does not conform to the expression grammar. Carries the 0-based
/// byte offset of the offending token.
class parse_error : public error {
   public:
    parse_error(const std::string& msg, std::size_t pos)
        : error("at " + std::to_string(pos) + ": " + msg), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

   private:
    std::size_t pos_;
};

/// Substitution would exceed the configured Bernstein degree bound.
class degree_limit_exceeded : public error {
   public:
    using error::error;
};

/// An l-th root needed by an exact construction is not available.
class no_exact_root : public error {
   public:
    using error::error;
};

/// A construction with no solution in the requested scalar domain.
class domain_error : public error {
   public:
    using error::error;
};

}  // namespace qweyl

#endif  // QWEYL_ERRORS_HPP
