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

#ifndef QWEYL_HATMAP_HPP
#define QWEYL_HATMAP_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "center.hpp"
#include "errors.hpp"
#include "expr.hpp"
#include "morphisms.hpp"
#include "poisson.hpp"

namespace qweyl {

inline bool is_prime(int v) {
    if (v < 2) return false;
    for (int d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

/// Ascending list of prime levels at which the limit is sampled.
class PrimeSchedule {
   public:
    PrimeSchedule() : PrimeSchedule({3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {}
    explicit PrimeSchedule(std::vector<int> primes) : primes_(std::move(primes)) {
        if (primes_.empty()) throw domain_error("empty prime schedule");
        for (std::size_t i = 0; i < primes_.size(); ++i) {
            if (!is_prime(primes_[i]) || primes_[i] < 3)
                throw domain_error("schedule entry " + std::to_string(primes_[i]) + " is not an odd prime");
            if (i > 0 && primes_[i] <= primes_[i - 1]) throw domain_error("schedule must be strictly ascending");
        }
    }

    /// Odd primes from first up to last inclusive.
    static PrimeSchedule up_to(int last, int first = 3) {
        std::vector<int> p;
        for (int v = std::max(first, 3); v <= last; ++v)
            if (is_prime(v)) p.push_back(v);
        return PrimeSchedule(std::move(p));
    }

    const std::vector<int>& primes() const noexcept { return primes_; }

   private:
    std::vector<int> primes_;
};

/// Thresholds of the convergence criterion.
struct Tolerances {
    double conv = 1e-6;   // |c_i - c_last| over the last three levels
    double kill = 1e-9;   // below this at the last two levels a coefficient vanishes
    double round = 1e-6;  // distance to a small rational for exact reporting
    long max_den = 64;
    std::size_t window = 3;
};

/// Outcome of one level: the image polynomial, or why there is none.
struct HatStep {
    int level = 0;
    bool central = false;
    std::string failure;
    CenterPoly<Cyclo> value;
};

/// theta^-1 e_q theta (p) at q = zeta_l. Any l >= 2 is accepted so that
/// non-prime levels can be inspected; schedules restrict to primes.
inline HatStep hat_step(const Endomorphism<SymbolicRing>& e, const CenterPoly<Rational>& p, int level) {
    if (level < 2) throw domain_error("level must be at least 2");
    HatStep step;
    step.level = level;
    const auto alg = root_algebra(e.n(), level);
    const auto es = specialize(e, alg);
    if (!es.validated()) {
        step.failure = "specialized map violates the relations";
        return step;
    }
    try {
        step.value = theta_inverse(apply(es, theta(p, alg)));
        step.central = true;
    } catch (const not_central& err) {
        step.failure = err.what();
    }
    return step;
}

/// Limit coefficient: a Gaussian rational when rounding succeeded, else a float.
struct LimitValue {
    bool exact = false;
    Rational re, im;
    std::complex<double> approx;

    bool is_zero() const { return exact ? re.is_zero() && im.is_zero() : approx == std::complex<double>(); }
    std::string str() const {
        if (!exact) return to_text(approx);
        if (im.is_zero()) return re.str();
        std::string imag = im.abs().is_one() ? "i" : im.abs().str() + "*i";
        if (re.is_zero()) return (im.sign() < 0 ? "-" : "") + imag;
        return re.str() + (im.sign() < 0 ? " - " : " + ") + imag;
    }
    friend bool operator==(const LimitValue&, const LimitValue&) = default;
};

/// Nearest rational with denominator <= max_den within tol, if any.
inline std::optional<Rational> round_to_rational(double v, double tol, long max_den) {
    if (!std::isfinite(v) || std::abs(v) > 9.0e15) return std::nullopt;
    for (long den = 1; den <= max_den; ++den) {
        const double num = std::round(v * static_cast<double>(den));
        if (std::abs(v - num / static_cast<double>(den)) < tol)
            return Rational(static_cast<long>(num), den);
    }
    return std::nullopt;
}

inline LimitValue round_limit(std::complex<double> v, const Tolerances& tol) {
    LimitValue out;
    out.approx = v;
    auto re = round_to_rational(v.real(), tol.round, tol.max_den);
    auto im = round_to_rational(v.imag(), tol.round, tol.max_den);
    if (re && im) {
        out.exact = true;
        out.re = *re;
        out.im = *im;
    }
    return out;
}

/// Coefficient of one monomial across the successful levels.
struct Trajectory {
    Monomial monomial;
    std::vector<std::complex<double>> values;
};

/// Stability test on the last tol.window entries.
inline bool trajectory_converges(const std::vector<std::complex<double>>& v, const Tolerances& tol) {
    if (v.size() < tol.window) return false;
    const auto& last = v.back();
    for (std::size_t i = v.size() - tol.window; i < v.size(); ++i)
        if (!std::isfinite(std::abs(v[i])) || std::abs(v[i] - last) >= tol.conv) return false;
    return true;
}

/// Vanishing test: below tol.kill at the last two entries.
inline bool trajectory_vanishes(const std::vector<std::complex<double>>& v, const Tolerances& tol) {
    if (v.size() < 2) return false;
    return std::abs(v[v.size() - 1]) < tol.kill && std::abs(v[v.size() - 2]) < tol.kill;
}

enum class Verdict { Converged, Diverged, CentralityFailed };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Converged: return "Converged";
        case Verdict::Diverged: return "Diverged";
        case Verdict::CentralityFailed: return "CentralityFailed";
    }
    return "";
}

/// Per-level results, trajectories and the verdict of a limit computation.
struct ConvergenceReport {
    int n = 1;
    std::vector<HatStep> steps;
    std::vector<int> used_levels;
    std::vector<int> failed_levels;
    std::vector<Trajectory> trajectories;
    Verdict verdict = Verdict::CentralityFailed;
    std::optional<Monomial> witness;
    std::vector<std::pair<Monomial, LimitValue>> limit;
    Tolerances tolerances;

    std::string limit_text() const {
        std::vector<std::string> terms;
        for (const auto& [m, c] : limit)
            terms.push_back(detail::format_term(c.str(), detail::monomial_text(m, 'r', 's')));
        return detail::join_terms(terms);
    }

    /// The limit as a rational polynomial when every coefficient is real and exact.
    std::optional<CenterPoly<Rational>> exact_limit() const {
        if (verdict != Verdict::Converged) return std::nullopt;
        std::vector<CenterPoly<Rational>::term_type> terms;
        for (const auto& [m, c] : limit) {
            if (!c.exact || !c.im.is_zero()) return std::nullopt;
            terms.emplace_back(m, c.re);
        }
        return CenterPoly<Rational>::from_terms(n, std::move(terms));
    }
};

/// Builds trajectories and the verdict from per-level results.
inline ConvergenceReport assess(int n, std::vector<HatStep> steps, const Tolerances& tol = {}) {
    ConvergenceReport rep;
    rep.n = n;
    rep.tolerances = tol;
    rep.steps = std::move(steps);
    std::vector<const HatStep*> ok;
    for (const auto& s : rep.steps) {
        if (s.central) {
            rep.used_levels.push_back(s.level);
            ok.push_back(&s);
        } else {
            rep.failed_levels.push_back(s.level);
        }
    }
    std::vector<Monomial> support;
    for (const auto* s : ok)
        for (const auto& [m, c] : s->value.terms())
            if (std::find(support.begin(), support.end(), m) == support.end()) support.push_back(m);
    std::sort(support.begin(), support.end(), GradedLex{});
    for (const auto& m : support) {
        Trajectory tr{m, {}};
        for (const auto* s : ok) tr.values.push_back(s->value.coeff(m).embed());
        rep.trajectories.push_back(std::move(tr));
    }

    const std::size_t tail = std::min(tol.window, rep.steps.size());
    const bool tail_failed = std::any_of(rep.steps.end() - static_cast<std::ptrdiff_t>(tail), rep.steps.end(),
                                         [](const HatStep& s) { return !s.central; });
    if (ok.size() < tol.window || tail_failed) {
        rep.verdict = Verdict::CentralityFailed;
        return rep;
    }
    rep.verdict = Verdict::Converged;
    for (const auto& tr : rep.trajectories) {
        if (!trajectory_converges(tr.values, tol)) {
            rep.verdict = Verdict::Diverged;
            rep.witness = tr.monomial;
            rep.limit.clear();
            return rep;
        }
        if (trajectory_vanishes(tr.values, tol)) continue;
        LimitValue v = round_limit(tr.values.back(), tol);
        if (!v.is_zero()) rep.limit.emplace_back(tr.monomial, v);
    }
    return rep;
}

/// theta^-1 e_q theta (p) over the schedule, with the convergence verdict.
inline ConvergenceReport hat(const Endomorphism<SymbolicRing>& e, const CenterPoly<Rational>& p,
                             const PrimeSchedule& schedule = {}, const Tolerances& tol = {}) {
    std::vector<HatStep> steps;
    for (int l : schedule.primes()) steps.push_back(hat_step(e, p, l));
    return assess(e.n(), std::move(steps), tol);
}

/// Hat of every coordinate r_i, s_i.
struct EndoReport {
    std::vector<std::pair<std::string, ConvergenceReport>> coordinates;
    Verdict verdict = Verdict::Converged;

    /// Images of the coordinates when every one converged exactly.
    std::optional<std::vector<CenterPoly<Rational>>> induced_map() const {
        if (verdict != Verdict::Converged) return std::nullopt;
        std::vector<CenterPoly<Rational>> out;
        for (const auto& [name, r] : coordinates) {
            auto p = r.exact_limit();
            if (!p) return std::nullopt;
            out.push_back(std::move(*p));
        }
        return out;
    }
};

inline std::string coordinate_name(char v, int i, int n) { return n == 1 ? std::string(1, v) : v + std::to_string(i); }

inline EndoReport hat_endo(const Endomorphism<SymbolicRing>& e, const PrimeSchedule& schedule = {},
                           const Tolerances& tol = {}) {
    EndoReport out;
    const int n = e.n();
    for (char v : {'r', 's'}) {
        for (int i = 1; i <= n; ++i) {
            const auto p = v == 'r' ? CenterPoly<Rational>::r(n, i) : CenterPoly<Rational>::s(n, i);
            out.coordinates.emplace_back(coordinate_name(v, i, n), hat(e, p, schedule, tol));
        }
    }
    for (const auto& [name, r] : out.coordinates) {
        if (r.verdict == Verdict::CentralityFailed) {
            out.verdict = Verdict::CentralityFailed;
            break;
        }
        if (r.verdict == Verdict::Diverged) out.verdict = Verdict::Diverged;
    }
    return out;
}

/// True iff e_q(g^l) is central for every generator g at q = zeta_l.
inline bool check_center_preservation(const Endomorphism<SymbolicRing>& e, int level,
                                      std::string* offending = nullptr) {
    const auto alg = root_algebra(e.n(), level);
    const auto es = specialize(e, alg);
    if (!es.validated()) {
        if (offending) *offending = "relations";
        return false;
    }
    const auto l = static_cast<unsigned long>(level);
    for (int i = 1; i <= e.n(); ++i) {
        for (char kind : {'x', 'd'}) {
            const auto g = kind == 'x' ? WeylElement<CycloRing>::x(alg, i) : WeylElement<CycloRing>::d(alg, i);
            if (!is_central(apply(es, power(g, l)))) {
                if (offending) *offending = std::string(1, kind) + std::to_string(i);
                return false;
            }
        }
    }
    return true;
}

/// Transported bracket over the schedule; the verdict uses the same criterion.
struct TransportReport {
    ConvergenceReport report;
    CenterPoly<Rational> standard;
    bool matches_standard = false;
};

inline TransportReport transport_limit(const CenterPoly<Rational>& p, const CenterPoly<Rational>& q,
                                       const PrimeSchedule& schedule = {}, const Tolerances& tol = {}) {
    if (p.n() != q.n()) throw context_mismatch("center polynomials of different arity");
    std::vector<HatStep> steps;
    for (int l : schedule.primes()) {
        HatStep s;
        s.level = l;
        try {
            PoissonContext ctx(p.n(), l);
            s.value = transported_bracket(p, q, ctx);
            s.central = true;
        } catch (const not_central& err) {
            s.failure = err.what();
        }
        steps.push_back(std::move(s));
    }
    TransportReport out;
    out.report = assess(p.n(), std::move(steps), tol);
    out.standard = standard_bracket(p, q);
    if (auto lim = out.report.exact_limit()) out.matches_standard = (*lim == out.standard);
    return out;
}

}  // namespace qweyl

#endif  // QWEYL_HATMAP_HPP
