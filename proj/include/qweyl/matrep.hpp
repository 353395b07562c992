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

#ifndef QWEYL_MATREP_HPP
#define QWEYL_MATREP_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "center.hpp"
#include "cyclo.hpp"
#include "errors.hpp"

namespace qweyl {

/// Dense square matrix, row-major.
template <class C>
class DenseMatrix {
   public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t n, const C& fill) : n_(n), a_(n * n, fill) {}

    static DenseMatrix identity(std::size_t n, const C& zero, const C& one) {
        DenseMatrix m(n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t size() const noexcept { return n_; }
    C& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const C& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    const std::vector<C>& data() const noexcept { return a_; }

    friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
        DenseMatrix out(x.n_, x.a_.empty() ? C() : x.a_[0] - x.a_[0]);
        for (std::size_t i = 0; i < x.n_; ++i)
            for (std::size_t k = 0; k < x.n_; ++k) {
                if (qweyl::is_zero(x(i, k))) continue;
                for (std::size_t j = 0; j < x.n_; ++j)
                    if (!qweyl::is_zero(y(k, j))) out(i, j) += x(i, k) * y(k, j);
            }
        return out;
    }
    friend DenseMatrix operator-(DenseMatrix x, const DenseMatrix& y) {
        for (std::size_t k = 0; k < x.a_.size(); ++k) x.a_[k] -= y.a_[k];
        return x;
    }
    DenseMatrix scaled(const C& c) const {
        DenseMatrix out(*this);
        for (auto& v : out.a_) v *= c;
        return out;
    }
    DenseMatrix pow(unsigned long e, const C& zero, const C& one) const {
        DenseMatrix r = identity(n_, zero, one);
        for (unsigned long k = 0; k < e; ++k) r = r * *this;
        return r;
    }

   private:
    std::size_t n_ = 0;
    std::vector<C> a_;
};

/// l-dimensional representation of A_1^q at the central point (a, b):
/// X acts as x, Y as d, with YX - qXY = I, X^l = a I, Y^l = b I.
template <class C>
struct MatRep {
    int level = 0;
    bool nilpotent = false;  // the truncated polynomial representation (a = b = 0)
    C q, a, b;
    DenseMatrix<C> X, Y;
};

namespace detail {

/// One diagonal generator and one cyclic band generator. The diagonal is
/// lam zeta^(sign i); the band matrix has diagonal 1/(lam_i (1 - q)), ones
/// above the diagonal and the corner closing the cycle so that its l-th
/// power is target I.
template <class C, class Pow>
std::pair<DenseMatrix<C>, DenseMatrix<C>> band_pair(int l, const C& lam, int sign, const C& q, const C& lam_pow_l,
                                                    const C& target, const C& zero, const C& one, Pow&& qpow) {
    const auto n = static_cast<std::size_t>(l);
    DenseMatrix<C> diag(n, zero), band(n, zero);
    const C inv_one_minus_q = one / (one - q);
    for (std::size_t i = 0; i < n; ++i) {
        const C li = lam * qpow(sign * static_cast<long>(i));
        diag(i, i) = li;
        band(i, i) = inv_one_minus_q / li;
        if (i + 1 < n) band(i, i + 1) = one;
    }
    C base = one;
    for (int k = 0; k < l; ++k) base *= inv_one_minus_q;
    band(n - 1, 0) = target - base / lam_pow_l;
    return {diag, band};
}

template <class C>
MatRep<C> nilpotent_rep(int l, const C& q, const C& zero, const C& one) {
    const auto n = static_cast<std::size_t>(l);
    MatRep<C> rep;
    rep.level = l;
    rep.nilpotent = true;
    rep.q = q;
    rep.a = zero;
    rep.b = zero;
    rep.X = DenseMatrix<C>(n, zero);
    rep.Y = DenseMatrix<C>(n, zero);
    // basis e_m = x^m; X e_m = e_(m+1), Y e_m = [m]_q e_(m-1)
    C qint = zero, qp = one;
    for (std::size_t m = 0; m < n; ++m) {
        if (m + 1 < n) rep.X(m + 1, m) = one;
        if (m > 0) rep.Y(m - 1, m) = qint;
        qint += qp;
        qp *= q;
    }
    return rep;
}

}  // namespace detail

/// Exact construction over Q(zeta_l). For a != 0 an l-th root of a is taken
/// from lroot_a or from a rational perfect power; for a = 0, b != 0 the same
/// holds for b. Throws no_exact_root when no root is available.
inline MatRep<Cyclo> build_rep(const FieldPtr& field, const Cyclo& a, const Cyclo& b,
                               std::optional<Cyclo> lroot_a = std::nullopt,
                               std::optional<Cyclo> lroot_b = std::nullopt) {
    const int l = field->level();
    const Cyclo zero(field, Rational()), one(field, Rational(1));
    const Cyclo q = Cyclo::zeta(field);
    const Cyclo ae = a * one, be = b * one;
    if (ae.is_zero() && be.is_zero()) return detail::nilpotent_rep(l, q, zero, one);

    const bool use_a = !ae.is_zero();
    const Cyclo& value = use_a ? ae : be;
    std::optional<Cyclo> root = use_a ? lroot_a : lroot_b;
    if (!root) {
        Rational r;
        if (value.is_rational() && value.rational_value().exact_root(static_cast<unsigned long>(l), r))
            root = Cyclo(field, r);
        else
            throw no_exact_root("no exact " + std::to_string(l) + "-th root of " + value.str() + " available");
    }
    if (!((*root * one).pow(l) == value)) throw no_exact_root("supplied root does not have the right power");

    auto qpow = [&](long k) { return Cyclo::root_power(field, k); };
    MatRep<Cyclo> rep;
    rep.level = l;
    rep.q = q;
    rep.a = ae;
    rep.b = be;
    if (use_a) {
        auto [d, y] = detail::band_pair(l, *root * one, 1, q, ae, be, zero, one, qpow);
        rep.X = std::move(d);
        rep.Y = std::move(y);
    } else {
        auto [d, x] = detail::band_pair(l, *root * one, -1, q, be, ae, zero, one, qpow);
        rep.Y = std::move(d);
        rep.X = std::move(x);
    }
    return rep;
}

/// Floating-point construction with principal l-th roots.
inline MatRep<std::complex<double>> build_rep_numeric(int l, std::complex<double> a, std::complex<double> b) {
    if (l < 2) throw domain_error("level must be at least 2");
    using Z = std::complex<double>;
    const Z zero(0.0, 0.0), one(1.0, 0.0);
    const auto field = CycloField::make(l);
    const Z q = field->root_power(1);
    if (a == zero && b == zero) return detail::nilpotent_rep(l, q, zero, one);
    const bool use_a = a != zero;
    const Z value = use_a ? a : b;
    const Z root = std::pow(value, 1.0 / l);
    auto qpow = [&](long k) { return field->root_power(k); };
    MatRep<Z> rep;
    rep.level = l;
    rep.q = q;
    rep.a = a;
    rep.b = b;
    if (use_a) {
        auto [d, y] = detail::band_pair(l, root, 1, q, a, b, zero, one, qpow);
        rep.X = std::move(d);
        rep.Y = std::move(y);
    } else {
        auto [d, x] = detail::band_pair(l, root, -1, q, b, a, zero, one, qpow);
        rep.Y = std::move(d);
        rep.X = std::move(x);
    }
    return rep;
}

/// Residual matrices YX - qXY - I, X^l - aI, Y^l - bI.
template <class C>
std::vector<DenseMatrix<C>> rep_residuals(const MatRep<C>& rep, const C& zero, const C& one) {
    const auto n = rep.X.size();
    const auto I = DenseMatrix<C>::identity(n, zero, one);
    const auto l = static_cast<unsigned long>(rep.level);
    return {rep.Y * rep.X - (rep.X * rep.Y).scaled(rep.q) - I, rep.X.pow(l, zero, one) - I.scaled(rep.a),
            rep.Y.pow(l, zero, one) - I.scaled(rep.b)};
}

inline bool rep_is_exact_solution(const MatRep<Cyclo>& rep) {
    const auto& field = rep.q.field();
    for (const auto& m : rep_residuals(rep, Cyclo(field, Rational()), Cyclo(field, Rational(1))))
        for (const auto& v : m.data())
            if (!v.is_zero()) return false;
    return true;
}

inline double rep_max_residual(const MatRep<std::complex<double>>& rep) {
    double worst = 0.0;
    for (const auto& m : rep_residuals(rep, {0.0, 0.0}, {1.0, 0.0}))
        for (const auto& v : m.data()) worst = std::max(worst, std::abs(v));
    return worst;
}

namespace detail {

template <class C>
std::vector<std::vector<C>> burnside_rows(const MatRep<C>& rep, const C& zero, const C& one) {
    const auto n = rep.X.size();
    std::vector<std::vector<C>> rows;
    auto Xi = DenseMatrix<C>::identity(n, zero, one);
    for (std::size_t i = 0; i < n; ++i) {
        auto XiYj = Xi;
        for (std::size_t j = 0; j < n; ++j) {
            rows.push_back(XiYj.data());
            XiYj = XiYj * rep.Y;
        }
        Xi = Xi * rep.X;
    }
    return rows;
}

}  // namespace detail

/// dim Span{X^i Y^j : 0 <= i, j < l} by exact elimination over Q(zeta_l).
inline int burnside_span_dim(const MatRep<Cyclo>& rep) {
    const auto& field = rep.q.field();
    auto rows = detail::burnside_rows(rep, Cyclo(field, Rational()), Cyclo(field, Rational(1)));
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    int rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const Cyclo inv = rows[r][c].inverse();
        for (std::size_t k = r + 1; k < rows.size(); ++k) {
            if (rows[k][c].is_zero()) continue;
            const Cyclo f = rows[k][c] * inv;
            for (std::size_t j = c; j < cols; ++j)
                if (!rows[r][j].is_zero()) rows[k][j] -= f * rows[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

/// Numerical rank via SVD: singular values above rel_tol times the largest.
inline int burnside_span_dim(const MatRep<std::complex<double>>& rep, double rel_tol = 1e-9) {
    auto rows = detail::burnside_rows(rep, {0.0, 0.0}, {1.0, 0.0});
    const auto m = static_cast<Eigen::Index>(rows.size());
    const auto k = static_cast<Eigen::Index>(rows.empty() ? 0 : rows[0].size());
    Eigen::MatrixXcd M(m, k);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < k; ++j) M(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > rel_tol * s(0)) ++rank;
    return rank;
}

/// One row of a cross-check between the Azumaya criterion and Burnside rank.
template <class C>
struct CrossCheckRow {
    C a, b;
    bool azumaya = false;
    int rank = 0;
    bool agrees = false;
};

inline std::vector<CrossCheckRow<Cyclo>> cross_check(const FieldPtr& field,
                                                     const std::vector<std::pair<Cyclo, Cyclo>>& points) {
    const int l2 = field->level() * field->level();
    std::vector<CrossCheckRow<Cyclo>> out;
    for (const auto& [a, b] : points) {
        CrossCheckRow<Cyclo> row{a, b};
        row.azumaya = azumaya_test(MaxIdealPoint<Cyclo>{{a}, {b}}, field);
        row.rank = burnside_span_dim(build_rep(field, a, b));
        row.agrees = row.azumaya == (row.rank == l2);
        out.push_back(std::move(row));
    }
    return out;
}

inline std::vector<CrossCheckRow<std::complex<double>>> cross_check_numeric(
    int l, const std::vector<std::pair<std::complex<double>, std::complex<double>>>& points, double tol = 1e-9) {
    std::vector<CrossCheckRow<std::complex<double>>> out;
    for (const auto& [a, b] : points) {
        CrossCheckRow<std::complex<double>> row{a, b};
        row.azumaya = azumaya_test(MaxIdealPoint<std::complex<double>>{{a}, {b}}, l, tol);
        row.rank = burnside_span_dim(build_rep_numeric(l, a, b), tol);
        row.agrees = row.azumaya == (row.rank == l * l);
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace qweyl

#endif  // QWEYL_MATREP_HPP
