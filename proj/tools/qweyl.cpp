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

// qweyl: command-line front end.
//
// Exit status: 0 on success, 1 when a mathematical check fails (an element is
// not central, a limit does not converge, a map violates the relations), 2 on
// malformed flags, expressions or files.

#include <complex>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qweyl/acceptance.hpp"
#include "qweyl/qweyl.hpp"

namespace {

using namespace qweyl;

constexpr int exit_ok = 0;
constexpr int exit_math = 1;
constexpr int exit_usage = 2;

/// Failure of a mathematical check, reported with exit status 1.
struct math_failure : error {
    using error::error;
};

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

AlgebraPtr<CycloRing> level_algebra(int n, int l) { return root_algebra(n, l); }

/// Scalar of Q(zeta_l) written in the expression grammar.
Cyclo parse_exact_scalar(const std::string& src, const AlgebraPtr<CycloRing>& alg) {
    const auto v = parse_weyl(src, alg);
    if (v.is_zero()) return Cyclo(alg->ring().field, Rational());
    if (v.size() != 1 || !v.terms()[0].first.is_one()) throw parse_error("'" + src + "' is not a scalar", 0);
    return v.terms()[0].second;
}

std::complex<double> parse_numeric_scalar(const std::string& src, int l) {
    const auto q = CycloField::make(l)->root_power(1);
    const auto v = parse_weyl(src, numeric_algebra(1, q));
    if (v.is_zero()) return {};
    if (v.size() != 1 || !v.terms()[0].first.is_one()) throw parse_error("'" + src + "' is not a scalar", 0);
    return v.terms()[0].second;
}

bool is_float_text(const std::string& s) { return s.find('.') != std::string::npos; }

PrimeSchedule schedule_from(const std::vector<int>& primes) {
    return primes.empty() ? PrimeSchedule{} : PrimeSchedule(primes);
}

int cmd_normalize(int n, std::optional<int> l, const std::string& expr) {
    if (l)
        std::cout << print_weyl(parse_weyl(expr, level_algebra(n, *l))) << "\n";
    else
        std::cout << print_weyl(parse_weyl(expr, symbolic_algebra(n))) << "\n";
    return exit_ok;
}

int cmd_qcomm(int n, std::optional<int> l, const std::string& a, const std::string& b) {
    if (l) {
        const auto alg = level_algebra(n, *l);
        std::cout << print_weyl(q_commutator(parse_weyl(a, alg), parse_weyl(b, alg))) << "\n";
    } else {
        const auto alg = symbolic_algebra(n);
        std::cout << print_weyl(q_commutator(parse_weyl(a, alg), parse_weyl(b, alg))) << "\n";
    }
    return exit_ok;
}

int cmd_poisson(int n, int l, const std::string& p, const std::string& q) {
    const PoissonContext ctx(n, l);
    const auto P = parse_weyl(p, ctx.algebra()), Q = parse_weyl(q, ctx.algebra());
    for (const auto* v : {&P, &Q})
        if (!is_central(*v)) throw math_failure("'" + print_weyl(*v) + "' is not central at l=" + std::to_string(l));
    const auto br = poisson_bracket(P, Q, ctx);
    std::cout << print_weyl(br) << "\n";
    std::cout << "center: " << print_center(theta_inverse(br)) << "\n";
    return exit_ok;
}

int cmd_center_check(int n, int l, const std::string& expr) {
    const auto a = parse_weyl(expr, level_algebra(n, l));
    try {
        const auto c = theta_inverse(a);
        std::cout << "central\n" << "theta^-1: " << print_center(c) << "\n";
        return exit_ok;
    } catch (const not_central& e) {
        std::cout << "not central: " << e.what() << "\n";
        return exit_math;
    }
}

int cmd_azumaya(int l, const std::string& a, const std::string& b, bool burnside) {
    if (is_float_text(a) || is_float_text(b)) {
        const auto av = parse_numeric_scalar(a, l), bv = parse_numeric_scalar(b, l);
        const bool az = azumaya_test(MaxIdealPoint<std::complex<double>>{{av}, {bv}}, l);
        std::cout << (az ? "true" : "false") << "\n";
        if (burnside) {
            const auto row = cross_check_numeric(l, {{av, bv}})[0];
            std::cout << "burnside span dimension: " << row.rank << " of " << l * l
                      << (row.agrees ? " (agrees)" : " (disagrees)") << "\n";
            if (!row.agrees) return exit_math;
        }
        return exit_ok;
    }
    const auto alg = level_algebra(1, l);
    const auto& field = alg->ring().field;
    const auto av = parse_exact_scalar(a, alg), bv = parse_exact_scalar(b, alg);
    const bool az = azumaya_test(MaxIdealPoint<Cyclo>{{av}, {bv}}, field);
    std::cout << (az ? "true" : "false") << "\n";
    if (burnside) {
        int rank = 0;
        try {
            rank = burnside_span_dim(build_rep(field, av, bv));
        } catch (const no_exact_root&) {
            rank = burnside_span_dim(build_rep_numeric(l, av.embed(), bv.embed()));
        }
        const bool agrees = az == (rank == l * l);
        std::cout << "burnside span dimension: " << rank << " of " << l * l << (agrees ? " (agrees)" : " (disagrees)")
                  << "\n";
        if (!agrees) return exit_math;
    }
    return exit_ok;
}

int cmd_rep(int l, const std::string& a, const std::string& b, const std::string& root_a, const std::string& root_b) {
    if (is_float_text(a) || is_float_text(b)) {
        print_json(rep_json(build_rep_numeric(l, parse_numeric_scalar(a, l), parse_numeric_scalar(b, l))));
        return exit_ok;
    }
    const auto alg = level_algebra(1, l);
    const auto& field = alg->ring().field;
    const auto av = parse_exact_scalar(a, alg), bv = parse_exact_scalar(b, alg);
    std::optional<Cyclo> ra, rb;
    if (!root_a.empty()) ra = parse_exact_scalar(root_a, alg);
    if (!root_b.empty()) rb = parse_exact_scalar(root_b, alg);
    try {
        print_json(rep_json(build_rep(field, av, bv, ra, rb)));
    } catch (const no_exact_root&) {
        if (ra || rb) throw;
        print_json(rep_json(build_rep_numeric(l, av.embed(), bv.embed())));
    }
    return exit_ok;
}

int cmd_lift(const std::string& kind, const std::string& poly) {
    const auto alg = symbolic_algebra(1);
    const auto p = parse_weyl(poly, alg);
    if (kind == "phi")
        print_json(endomorphism_json(lift_phi(p, alg)));
    else
        print_json(endomorphism_json(lift_psi(p, alg)));
    return exit_ok;
}

int cmd_validate(const std::string& file) {
    const auto e = endomorphism_from_json(read_json_file(file));
    return std::visit(
        [](const auto& v) {
            print_json(residuals_json(v));
            return v.validated() ? exit_ok : exit_math;
        },
        e);
}

int verdict_status(Verdict v) { return v == Verdict::Converged ? exit_ok : exit_math; }

int cmd_hat(const std::string& file, const std::vector<int>& primes, const std::string& poly) {
    const auto any = endomorphism_from_json(read_json_file(file));
    const auto* e = std::get_if<Endomorphism<SymbolicRing>>(&any);
    if (!e) throw parse_error("hat needs a descriptor with \"param\": \"t\"", 0);
    if (!e->validated()) throw math_failure("the map violates the relations: " + e->residuals()[0].relation);
    const auto schedule = schedule_from(primes);
    const Json endo = endomorphism_json(*e);
    if (!poly.empty()) {
        const auto p = parse_center(poly, e->n());
        const auto rep = hat(*e, p, schedule);
        print_json(report_json(rep, endo, print_center(p)));
        return verdict_status(rep.verdict);
    }
    const auto rep = hat_endo(*e, schedule);
    print_json(endo_report_json(rep, endo));
    return verdict_status(rep.verdict);
}

int cmd_transport(int n, const std::string& p, const std::string& q, const std::vector<int>& primes) {
    const auto P = parse_center(p, n), Q = parse_center(q, n);
    const auto t = transport_limit(P, Q, schedule_from(primes));
    print_json(transport_json(t, print_center(P), print_center(Q)));
    return verdict_status(t.report.verdict);
}

int cmd_sweep(const std::vector<int>& only) {
    const auto results = acceptance::run_all(std::cout, only);
    int passed = 0;
    for (const auto& r : results) passed += r.passed;
    std::cout << passed << "/" << results.size() << " criteria passed\n";
    return passed == static_cast<int>(results.size()) ? exit_ok : exit_math;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in quantized Weyl algebras"};
    app.require_subcommand(1);

    int n = 1, l = 0;
    std::optional<int> level;
    std::string e1, e2, a, b, root_a, root_b, kind, poly, file;
    std::vector<int> primes, only;
    bool burnside = false;

    auto* normalize = app.add_subcommand("normalize", "PBW normal form of an expression");
    normalize->add_option("--n", n, "number of variable pairs")->check(CLI::PositiveNumber);
    normalize->add_option("--l", level, "specialize t to the primitive l-th root of unity");
    normalize->add_option("expr", e1)->required();

    auto* qcomm = app.add_subcommand("qcomm", "[a, b]_t = ab - t ba");
    qcomm->add_option("--n", n)->check(CLI::PositiveNumber);
    qcomm->add_option("--l", level);
    qcomm->add_option("a", e1)->required();
    qcomm->add_option("b", e2)->required();

    auto* poisson = app.add_subcommand("poisson", "Poisson bracket of central elements");
    poisson->add_option("--n", n)->check(CLI::PositiveNumber);
    poisson->add_option("--l", l)->required();
    poisson->add_option("p", e1)->required();
    poisson->add_option("q", e2)->required();

    auto* center = app.add_subcommand("center-check", "centrality and theta^-1 decomposition");
    center->add_option("--n", n)->check(CLI::PositiveNumber);
    center->add_option("--l", l)->required();
    center->add_option("expr", e1)->required();

    auto* azumaya = app.add_subcommand("azumaya", "Azumaya criterion at the point (a, b)");
    azumaya->add_option("--l", l)->required();
    azumaya->add_option("--a", a)->required();
    azumaya->add_option("--b", b)->required();
    azumaya->add_flag("--burnside", burnside, "cross-check with the rank of the matrix representation");

    auto* rep = app.add_subcommand("rep", "l-dimensional representation at (a, b) as JSON");
    rep->add_option("--l", l)->required();
    rep->add_option("--a", a)->required();
    rep->add_option("--b", b)->required();
    rep->add_option("--root-a", root_a, "an l-th root of a in Q(zeta_l)");
    rep->add_option("--root-b", root_b, "an l-th root of b in Q(zeta_l)");

    auto* liftc = app.add_subcommand("lift", "descriptor of a lifted elementary map");
    liftc->add_option("--kind", kind)->required()->check(CLI::IsMember({"phi", "psi"}));
    liftc->add_option("--poly", poly, "F in x1 for phi, G in d1 for psi")->required();

    auto* validatec = app.add_subcommand("validate", "relation residuals of a descriptor");
    validatec->add_option("file", file)->required();

    auto* hatc = app.add_subcommand("hat", "limit of the induced maps on the center");
    hatc->add_option("file", file)->required();
    hatc->add_option("--primes", primes)->delimiter(',');
    hatc->add_option("--poly", poly, "center polynomial; all coordinates when omitted");

    auto* transport = app.add_subcommand("transport", "limit of the transported bracket");
    transport->add_option("--n", n)->check(CLI::PositiveNumber);
    transport->add_option("p", e1)->required();
    transport->add_option("q", e2)->required();
    transport->add_option("--primes", primes)->delimiter(',');

    auto* sweep = app.add_subcommand("sweep", "run the acceptance suite");
    sweep->add_option("--only", only, "criterion numbers")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*normalize) return cmd_normalize(n, level, e1);
        if (*qcomm) return cmd_qcomm(n, level, e1, e2);
        if (*poisson) return cmd_poisson(n, l, e1, e2);
        if (*center) return cmd_center_check(n, l, e1);
        if (*azumaya) return cmd_azumaya(l, a, b, burnside);
        if (*rep) return cmd_rep(l, a, b, root_a, root_b);
        if (*liftc) return cmd_lift(kind, poly);
        if (*validatec) return cmd_validate(file);
        if (*hatc) return cmd_hat(file, primes, poly);
        if (*transport) return cmd_transport(n, e1, e2, primes);
        if (*sweep) return cmd_sweep(only);
    } catch (const math_failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_math;
    } catch (const not_central& e) {
        std::cerr << "not central: " << e.what() << "\n";
        return exit_math;
    } catch (const division_failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_math;
    } catch (const no_exact_root& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_math;
    } catch (const degree_limit_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_math;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
