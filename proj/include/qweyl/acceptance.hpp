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

#ifndef QWEYL_ACCEPTANCE_HPP
#define QWEYL_ACCEPTANCE_HPP

// The acceptance suite: eleven checks with fixed seeds, tolerances and time
// budgets. Shared by the acceptance test binary and `qweyl sweep`.

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "center.hpp"
#include "expr.hpp"
#include "hatmap.hpp"
#include "matrep.hpp"
#include "morphisms.hpp"
#include "poisson.hpp"
#include "testing.hpp"
#include "weyl.hpp"

namespace qweyl::acceptance {

/// Outcome of one check; detail names the first failure or summarizes counts.
struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& what) {
        if (ok) detail = what;
        ok = false;
    }
};

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
};

struct Result {
    int id = 0;
    std::string name;
    bool passed = false;
    bool in_time = false;
    double seconds = 0.0;
    double budget_seconds = 0.0;
    std::string detail;
};

namespace detail {

using testing::Rng;

inline Cyclo cyc(const FieldPtr& f, long v) { return Cyclo(f, Rational(v)); }

/// l (q - 1) / [l-1]_q! at q = zeta_l, evaluated in floating point.
inline std::complex<double> straight_coefficient_numeric(int l) {
    const double pi = std::acos(-1.0);
    const std::complex<double> q = std::polar(1.0, 2.0 * pi / l);
    std::complex<double> fact = 1.0;
    for (int k = 1; k <= l - 1; ++k) {
        std::complex<double> qk = 0.0;
        for (int j = 0; j < k; ++j) qk += std::pow(q, j);
        fact *= qk;
    }
    return static_cast<double>(l) * (q - 1.0) / fact;
}

inline Outcome relations_and_pbw() {
    Outcome out;
    Rng g(0x5eed01);
    int checks = 0;
    for (int n = 1; n <= 2; ++n) {
        const auto alg = symbolic_algebra(n);
        const auto one = WeylElement<SymbolicRing>::one(alg);
        for (int it = 0; it < 25; ++it) {
            const auto a = testing::random_symbolic(g, alg), b = testing::random_symbolic(g, alg),
                       c = testing::random_symbolic(g, alg);
            const auto v = testing::random_symbolic(g, alg, 4, 4, true);
            const std::string at = " (n=" + std::to_string(n) + ", sample " + std::to_string(it) + ")";
            if (!(mul(mul(a, b), c) == mul(a, mul(b, c)))) out.fail("associativity" + at);
            if (!(mul(a, b + c) == mul(a, b) + mul(a, c))) out.fail("left distributivity" + at);
            if (!(mul(a + b, c) == mul(a, c) + mul(b, c))) out.fail("right distributivity" + at);
            if (!(mul(one, a) == a) || !(mul(a, one) == a)) out.fail("unit" + at);
            if (!(act(mul(a, b), v) == act(a, act(b, v)))) out.fail("polynomial action" + at);
            checks += 6;
        }
        for (int i = 1; i <= n; ++i) {
            const auto xi = WeylElement<SymbolicRing>::x(alg, i), di = WeylElement<SymbolicRing>::d(alg, i);
            if (!(q_commutator(di, xi) == one)) out.fail("[d" + std::to_string(i) + ", x" + std::to_string(i) + "]_t != 1");
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                const auto xj = WeylElement<SymbolicRing>::x(alg, j), dj = WeylElement<SymbolicRing>::d(alg, j);
                if (!commutator(di, xj).is_zero() || !commutator(xi, xj).is_zero() || !commutator(di, dj).is_zero())
                    out.fail("mixed commutator nonzero at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
            checks += 1 + 3 * (n - 1);
        }
    }
    if (out.ok) out.detail = std::to_string(checks) + " identities";
    return out;
}

inline Outcome f_power_closed_form_check() {
    Outcome out;
    int checks = 0;
    for (int l = 2; l <= 12; ++l) {
        for (int n = 1; n <= 2; ++n) {
            const auto alg = root_algebra(n, l);
            if (!(power(f_element(alg), static_cast<unsigned long>(l)) == f_power_closed_form(alg)))
                out.fail("f^l differs from the closed form at l=" + std::to_string(l) + ", n=" + std::to_string(n));
            ++checks;
        }
    }
    if (out.ok) out.detail = std::to_string(checks) + " levels";
    return out;
}

inline Outcome straight_bracket() {
    Outcome out;
    for (int l = 2; l <= 12; ++l) {
        for (int n = 1; n <= (l <= 3 ? 2 : 1); ++n) {
            const PoissonContext ctx(n, l);
            const auto& field = ctx.field();
            const auto alg = ctx.algebra();
            const int i = n;
            const auto lu = static_cast<unsigned long>(l);
            const auto br = poisson_bracket(power(WeylElement<CycloRing>::d(alg, i), lu),
                                            power(WeylElement<CycloRing>::x(alg, i), lu), ctx);
            const Cyclo q = Cyclo::zeta(field);
            const Cyclo coeff = cyc(field, l) * (q - cyc(field, 1)) * specialize(qfact(lu - 1), field).inverse();
            Monomial m(n);
            m.alpha(i - 1) = static_cast<Monomial::exp_type>(l);
            m.beta(i - 1) = static_cast<Monomial::exp_type>(l);
            const auto expected = WeylElement<CycloRing>::one(alg) + WeylElement<CycloRing>::term(alg, m, coeff);
            if (!(br == expected)) out.fail("bracket mismatch at l=" + std::to_string(l) + ", n=" + std::to_string(n));
            if (l == 2 && n == 1 && !(br == parse_weyl("1 - 4*x1^2*d1^2", alg))) out.fail("l=2 instance is not 1 - 4x^2d^2");
            const double got = std::abs(coeff.embed()), want = std::abs(straight_coefficient_numeric(l));
            if (std::abs(got - want) > 1e-9 * std::max(1.0, want)) out.fail("numeric coefficient mismatch at l=" + std::to_string(l));
        }
    }
    if (out.ok) out.detail = "l = 2..12";
    return out;
}

inline Outcome poisson_axioms() {
    Outcome out;
    Rng g(0x5eed04);
    int samples = 0;
    for (int l : {2, 3, 5}) {
        const PoissonContext ctx(1, l);
        const auto& field = ctx.field();
        const auto alg = ctx.algebra();
        const auto lift_alg = ctx.lift_algebra_ptr();
        const long max_deg = 2;
        const auto t_minus_q =
            WeylElement<LiftRing>::scalar(lift_alg, CycloLaurent::from_coeffs(0, {-Cyclo::zeta(field), cyc(field, 1)}));
        for (int it = 0; it < 34; ++it) {
            const std::string at = " (l=" + std::to_string(l) + ", sample " + std::to_string(it) + ")";
            const auto P = theta(testing::random_center(g, 1, field, max_deg), alg);
            const auto Q = theta(testing::random_center(g, 1, field, max_deg), alg);
            const auto R = theta(testing::random_center(g, 1, field, max_deg), alg);
            const auto pq = poisson_bracket(P, Q, ctx);
            if (!is_central(pq)) out.fail("bracket not central" + at);
            if (!(pq == -poisson_bracket(Q, P, ctx))) out.fail("antisymmetry" + at);
            const auto pr = poisson_bracket(P, R, ctx);
            if (!(poisson_bracket(P, mul(Q, R), ctx) == mul(pq, R) + mul(Q, pr))) out.fail("Leibniz" + at);
            const auto qr = poisson_bracket(Q, R, ctx);
            const auto rp = poisson_bracket(R, P, ctx);
            const auto jac = poisson_bracket(P, qr, ctx) + poisson_bracket(Q, rp, ctx) + poisson_bracket(R, pq, ctx);
            if (!jac.is_zero()) out.fail("Jacobi" + at);
            const auto X = lift(testing::random_root(g, alg, 3, 3), lift_alg);
            const auto Y = lift(testing::random_root(g, alg, 3, 3), lift_alg);
            const auto other = divided_bracket(lift(P, lift_alg) + mul(t_minus_q, X), lift(Q, lift_alg) + mul(t_minus_q, Y), ctx);
            if (!(other == pq)) out.fail("lift independence" + at);
            ++samples;
        }
    }
    if (out.ok) out.detail = std::to_string(samples) + " triples";
    return out;
}

inline Outcome transport_check() {
    Outcome out;
    const auto r = CenterPoly<Rational>::r(1, 1), s = CenterPoly<Rational>::s(1, 1);
    const auto t = transport_limit(r, s);
    if (t.report.verdict != Verdict::Converged) out.fail(std::string("verdict ") + verdict_name(t.report.verdict));
    const auto lim = t.report.exact_limit();
    if (!lim || !(*lim == CenterPoly<Rational>::constant(1, Rational(1)))) out.fail("limit is not 1");
    if (!t.matches_standard) out.fail("limit differs from the standard bracket");
    Monomial rs(1);
    rs.alpha(0) = 1;
    rs.beta(0) = 1;
    double prev = INFINITY, at11 = 0.0, dev31 = INFINITY;
    for (const auto& step : t.report.steps) {
        if (!step.central) {
            out.fail("level " + std::to_string(step.level) + " failed");
            continue;
        }
        const double mag = std::abs(step.value.coeff(rs).embed());
        if (step.level == 11) {
            at11 = mag;
            const double want = std::abs(straight_coefficient_numeric(11));
            if (std::abs(mag - want) > 1e-9 || std::abs(mag - 1.8e-3) > 0.05e-3)
                out.fail("sr coefficient at l=11 is " + format_double(mag));
        }
        if (step.level >= 11) {
            if (!(mag < prev)) out.fail("sr coefficient not decreasing at l=" + std::to_string(step.level));
            prev = mag;
        }
        if (step.level == 31) {
            dev31 = 0.0;
            for (const auto& [m, c] : step.value.terms())
                dev31 = std::max(dev31, std::abs(c.embed() - (m.is_one() ? 1.0 : 0.0)));
        }
    }
    if (!(dev31 < 1e-8)) out.fail("deviation at l=31 is " + format_double(dev31));
    if (out.ok) {
        std::ostringstream os;
        os << "|c_11| = " << at11 << ", deviation at 31 = " << dev31;
        out.detail = os.str();
    }
    return out;
}

inline Outcome evidence_at_one() {
    Outcome out;
    int checks = 0;
    for (int l : {3, 5, 7, 11, 13}) {
        const auto alg = root_algebra(1, l);
        const auto& field = alg->ring().field;
        const auto lu = static_cast<unsigned long>(l);
        const auto x = WeylElement<CycloRing>::x(alg, 1), d = WeylElement<CycloRing>::d(alg, 1);
        const auto f = f_element(alg);
        const auto dl = power(d, lu), fl = f_power_closed_form(alg);
        for (unsigned m = 0; m <= 2; ++m) {
            if (!(l > static_cast<int>(m) + 1)) continue;
            const auto xm = power(x, m), xml = power(x, m * lu);
            for (const char* lam : {"1", "1/2", "2"}) {
                const Cyclo lc(field, Rational::parse(lam));
                const auto lhs = power(d + mul(xm, f).scaled(lc), lu);
                const auto rhs = dl + mul(xml, fl).scaled(lc.pow(l));
                if (!(lhs == rhs))
                    out.fail("mismatch at l=" + std::to_string(l) + ", m=" + std::to_string(m) + ", lambda=" + lam);
                ++checks;
            }
        }
    }
    if (out.ok) out.detail = std::to_string(checks) + " identities";
    return out;
}

inline std::string map_text(const std::vector<CenterPoly<Rational>>& m) {
    std::string s;
    for (const auto& p : m) s += (s.empty() ? "" : ", ") + print_center(p);
    return "(" + s + ")";
}

inline Outcome hat_limits() {
    Outcome out;
    const auto alg = symbolic_algebra(1);
    const auto r = CenterPoly<Rational>::r(1, 1), s = CenterPoly<Rational>::s(1, 1);
    auto expect = [&](const Endomorphism<SymbolicRing>& e, const std::vector<CenterPoly<Rational>>& want,
                      const std::string& label) {
        const auto rep = hat_endo(e);
        if (rep.verdict != Verdict::Converged) {
            out.fail(label + ": verdict " + verdict_name(rep.verdict));
            return;
        }
        const auto got = rep.induced_map();
        if (!got) {
            out.fail(label + ": limit not exact");
            return;
        }
        for (const auto& p : *got)
            for (const auto& [m, c] : p.terms())
                if (!c.is_integer()) out.fail(label + ": non-integer coefficient");
        if (!(*got == want)) out.fail(label + ": limit " + map_text(*got));
    };
    for (unsigned m = 0; m <= 2; ++m)
        expect(lift_phi(Rational(1), m, alg), {r + s.pow(m), s}, "lift_phi(1, x^" + std::to_string(m) + ")");
    const auto half = lift_phi(Rational(1, 2), 0, alg);
    expect(compose(half, half), {r, s}, "lift_phi(1/2, 1) composed with itself");
    const auto big = hat_endo(lift_phi(Rational(2), 0, alg));
    if (big.verdict != Verdict::Diverged) out.fail(std::string("lift_phi(2, 1): verdict ") + verdict_name(big.verdict));
    if (out.ok) out.detail = "5 endomorphisms, primes 3..31";
    return out;
}

inline Outcome prime_necessity() {
    Outcome out;
    const auto e = lift_phi(Rational(1), 1, symbolic_algebra(1));
    const auto r = CenterPoly<Rational>::r(1, 1);
    std::vector<std::complex<double>> even;
    for (int l : {4, 6, 8, 10, 12}) {
        const auto step = hat_step(e, r, l);
        if (step.central) even.push_back(step.value.constant_term().embed());
    }
    const auto prime = hat(e, r);
    std::vector<std::complex<double>> odd;
    for (const auto& step : prime.steps)
        if (step.central) odd.push_back(step.value.constant_term().embed());
    const Tolerances tol;
    if (prime.verdict != Verdict::Converged) out.fail("prime schedule does not converge");
    if (!trajectory_converges(odd, tol)) out.fail("prime constant-term trajectory fails the criterion");
    if (trajectory_converges(even, tol)) out.fail("even constant-term trajectory passes the criterion");
    if (out.ok) {
        std::ostringstream os;
        os << "even |c_0| at l=12: " << (even.empty() ? 0.0 : std::abs(even.back())) << " over " << even.size() << " levels";
        out.detail = os.str();
    }
    return out;
}

inline Outcome azumaya_vs_burnside() {
    Outcome out;
    int points = 0;
    {
        const auto f2 = CycloField::make(2);
        std::vector<std::pair<Cyclo, Cyclo>> grid;
        for (const char* a : {"0", "1/4", "1"})
            for (const char* b : {"0", "1/4", "1"}) grid.emplace_back(Cyclo(f2, Rational::parse(a)), Cyclo(f2, Rational::parse(b)));
        for (const auto& row : cross_check(f2, grid)) {
            if (!row.agrees) out.fail("l=2 disagreement at (" + row.a.str() + ", " + row.b.str() + ")");
            ++points;
        }
        for (const auto& [a, b] : grid)
            if (!rep_is_exact_solution(build_rep(f2, a, b))) out.fail("l=2 relations fail at (" + a.str() + ", " + b.str() + ")");
    }
    {
        const auto f3 = CycloField::make(3);
        const auto rows = cross_check(f3, {{cyc(f3, 1), azumaya_threshold(f3)}});
        if (!rows[0].agrees || rows[0].azumaya) out.fail("l=3 boundary point misclassified");
        ++points;
    }
    Rng g(0x5eed09);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int l : {3, 5}) {
        const std::complex<double> bad = azumaya_threshold(CycloField::make(l)).embed();
        for (int k = 0; k < 12; ++k) {
            std::complex<double> a(u(g), u(g)), b(u(g), u(g));
            if (k % 4 == 3) b = bad / a;
            const auto rep = build_rep_numeric(l, a, b);
            if (rep_max_residual(rep) > 1e-9) out.fail("numeric relations exceed 1e-9 at l=" + std::to_string(l));
            const auto row = cross_check_numeric(l, {{a, b}})[0];
            if (!row.agrees) out.fail("numeric disagreement at l=" + std::to_string(l) + ", sample " + std::to_string(k));
            if (k % 4 == 3 && row.azumaya) out.fail("boundary point classified Azumaya");
            ++points;
        }
    }
    if (out.ok) out.detail = std::to_string(points) + " points";
    return out;
}

inline Outcome center_preservation() {
    Outcome out;
    const auto alg = symbolic_algebra(1);
    const std::vector<std::string> polys = {"0", "1", "x1", "x1^2", "1 + x1", "x1 + x1^2", "1/2 - x1 + 2*x1^2"};
    int checks = 0;
    for (char kind : {'F', 'G'}) {
        for (const auto& src : polys) {
            std::string text = src;
            if (kind == 'G')
                for (auto& ch : text)
                    if (ch == 'x') ch = 'd';
            const auto p = parse_weyl(text, alg);
            const auto e = kind == 'F' ? lift_phi(p, alg) : lift_psi(p, alg);
            for (int l : {3, 5, 7, 11}) {
                std::string bad;
                if (!check_center_preservation(e, l, &bad))
                    out.fail(std::string(kind == 'F' ? "lift_phi(" : "lift_psi(") + text + ") at l=" + std::to_string(l) + " (" + bad + ")");
                ++checks;
            }
        }
    }
    if (out.ok) out.detail = std::to_string(checks) + " (lift, prime) pairs";
    return out;
}

inline Outcome divisibility() {
    Outcome out;
    Rng g(0x5eed0b);
    int accepted = 0, rejected = 0;
    for (int n = 1; n <= 2; ++n) {
        const auto alg = symbolic_algebra(n);
        int count = 0;
        while (count < 25) {
            const auto a = testing::random_symbolic(g, alg);
            const int i = static_cast<int>(testing::uniform(g, 1, n));
            if (f_quotient_image(a, i).empty()) {
                ++rejected;
                continue;
            }
            const auto fi = f_i(alg, i);
            if (divisible_by_f(a, i)) out.fail("f-free element reported divisible");
            if (!divisible_by_f(mul(fi, a), i)) out.fail("f*a not divisible");
            if (!divisible_by_f(mul(a, fi), i)) out.fail("a*f not divisible");
            ++count;
            ++accepted;
        }
        if (divisible_by_f(WeylElement<SymbolicRing>::one(alg), 1)) out.fail("1 reported divisible");
    }
    if (out.ok) out.detail = std::to_string(accepted) + " elements, " + std::to_string(rejected) + " redrawn";
    return out;
}

}  // namespace detail

/// The criteria in fixed order.
inline std::vector<Criterion> manifest() {
    return {
        {1, "defining relations and PBW", 10, detail::relations_and_pbw},
        {2, "f^l closed form", 30, detail::f_power_closed_form_check},
        {3, "bracket of d^l and x^l", 60, detail::straight_bracket},
        {4, "Poisson axioms", 120, detail::poisson_axioms},
        {5, "transported bracket limit", 60, detail::transport_check},
        {6, "(d + lambda x^m f)^l at roots of unity", 120, detail::evidence_at_one},
        {7, "hat-map limits", 180, detail::hat_limits},
        {8, "prime levels are necessary", 60, detail::prime_necessity},
        {9, "Azumaya criterion vs Burnside rank", 60, detail::azumaya_vs_burnside},
        {10, "center preservation of lifts", 120, detail::center_preservation},
        {11, "divisibility by f", 30, detail::divisibility},
    };
}

inline Result run(const Criterion& c) {
    Result r{c.id, c.name, false, false, 0.0, c.budget_seconds, {}};
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = c.run();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.in_time = r.seconds <= c.budget_seconds;
    r.passed = o.ok && r.in_time;
    r.detail = o.detail;
    if (o.ok && !r.in_time) r.detail += " (over time budget)";
    return r;
}

inline std::string result_line(const Result& r) {
    std::ostringstream os;
    os << (r.passed ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << r.id << "  " << r.name << "  ["
       << std::fixed << std::setprecision(2) << r.seconds << " s / " << std::setprecision(0) << r.budget_seconds
       << " s]  " << r.detail;
    return os.str();
}

/// Runs the selected criteria (all when ids is empty), printing one line each.
inline std::vector<Result> run_all(std::ostream& os, const std::vector<int>& ids = {}) {
    std::vector<Result> out;
    for (const auto& c : manifest()) {
        if (!ids.empty() && std::find(ids.begin(), ids.end(), c.id) == ids.end()) continue;
        out.push_back(run(c));
        os << result_line(out.back()) << std::endl;
    }
    return out;
}

}  // namespace qweyl::acceptance

#endif  // QWEYL_ACCEPTANCE_HPP
