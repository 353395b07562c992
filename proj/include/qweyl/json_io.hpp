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

#ifndef QWEYL_JSON_IO_HPP
#define QWEYL_JSON_IO_HPP

// JSON descriptors and reports. Objects are nlohmann::ordered_json so that key
// order, and hence the serialized bytes, depend only on the input.

#include <complex>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "expr.hpp"
#include "hatmap.hpp"
#include "matrep.hpp"
#include "morphisms.hpp"

namespace qweyl {

using Json = nlohmann::ordered_json;

inline constexpr int json_schema = 1;

inline Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

inline Json scalar_json(const Cyclo& c) { return Json{{"exact", c.str()}, {"approx", complex_json(c.embed())}}; }

/// Endomorphism read from a descriptor: symbolic t or a fixed root of unity.
using AnyEndomorphism = std::variant<Endomorphism<SymbolicRing>, Endomorphism<CycloRing>>;

namespace detail {

template <class Ring>
Endomorphism<Ring> endo_from_texts(const AlgebraPtr<Ring>& alg, const Json& xs, const Json& ds) {
    auto read = [&](const Json& list, const char* key) {
        if (!list.is_array()) throw parse_error(std::string("'") + key + "' must be an array of expressions", 0);
        std::vector<WeylElement<Ring>> out;
        for (const auto& v : list) {
            if (!v.is_string()) throw parse_error(std::string("'") + key + "' entries must be strings", 0);
            out.push_back(parse_weyl(v.get<std::string>(), alg));
        }
        return out;
    };
    return Endomorphism<Ring>::make(alg, read(xs, "images_x"), read(ds, "images_d"));
}

template <class Ring>
Json images_json(const Endomorphism<Ring>& e) {
    Json xs = Json::array(), ds = Json::array();
    for (const auto& v : e.images_x()) xs.push_back(print_weyl(v));
    for (const auto& v : e.images_d()) ds.push_back(print_weyl(v));
    return Json{{"images_x", xs}, {"images_d", ds}};
}

}  // namespace detail

/// Reads {"n", "param": "t" | {"l": L}, "images_x", "images_d"}.
inline AnyEndomorphism endomorphism_from_json(const Json& j) {
    if (!j.is_object()) throw parse_error("descriptor must be a JSON object", 0);
    if (!j.contains("n") || !j["n"].is_number_integer()) throw parse_error("descriptor needs an integer 'n'", 0);
    if (!j.contains("images_x") || !j.contains("images_d")) throw parse_error("descriptor needs 'images_x' and 'images_d'", 0);
    const int n = j["n"].get<int>();
    const Json param = j.value("param", Json("t"));
    if (param.is_string() && param.get<std::string>() == "t")
        return detail::endo_from_texts(symbolic_algebra(n), j["images_x"], j["images_d"]);
    if (param.is_object() && param.contains("l") && param["l"].is_number_integer())
        return detail::endo_from_texts(root_algebra(n, param["l"].get<int>()), j["images_x"], j["images_d"]);
    throw parse_error("'param' must be \"t\" or {\"l\": L}", 0);
}

inline Json endomorphism_json(const Endomorphism<SymbolicRing>& e) {
    Json j{{"schema", json_schema}, {"n", e.n()}, {"param", "t"}};
    j.update(detail::images_json(e));
    return j;
}

inline Json endomorphism_json(const Endomorphism<CycloRing>& e) {
    Json j{{"schema", json_schema}, {"n", e.n()}, {"param", Json{{"l", e.algebra()->ring().level()}}}};
    j.update(detail::images_json(e));
    return j;
}

inline Json endomorphism_json(const AnyEndomorphism& e) {
    return std::visit([](const auto& v) { return endomorphism_json(v); }, e);
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'", 0);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& err) {
        throw parse_error(std::string("invalid JSON: ") + err.what(), err.byte);
    }
}

template <class Ring>
Json residuals_json(const Endomorphism<Ring>& e) {
    Json list = Json::array();
    for (const auto& r : e.residuals()) list.push_back(Json{{"relation", r.relation}, {"value", print_weyl(r.value)}});
    return Json{{"schema", json_schema}, {"valid", e.validated()}, {"residuals", list}};
}

inline Json monomial_json(const Monomial& m) {
    return Json::array({Json(m.alphas()), Json(m.betas())});
}

inline Json step_json(const HatStep& s) {
    Json j{{"l", s.level}, {"centrality", s.central}};
    if (!s.central) {
        j["failure"] = s.failure;
        j["coeffs"] = Json::array();
        return j;
    }
    Json cs = Json::array();
    for (const auto& [m, c] : s.value.terms())
        cs.push_back(Json{{"monomial", monomial_json(m)}, {"exact", c.str()}, {"approx", complex_json(c.embed())}});
    j["coeffs"] = cs;
    return j;
}

inline Json limit_json(const ConvergenceReport& r) {
    if (r.verdict != Verdict::Converged) return nullptr;
    return r.limit_text();
}

/// Report of one limit computation; endo and poly are given as already
/// serialized descriptors.
inline Json report_json(const ConvergenceReport& r, Json endo, Json poly) {
    Json primes = Json::array();
    for (const auto& s : r.steps) primes.push_back(step_json(s));
    Json j{{"schema", json_schema}, {"endo", std::move(endo)}, {"poly", std::move(poly)}, {"primes", primes},
           {"verdict", verdict_name(r.verdict)}, {"limit", limit_json(r)}};
    if (r.witness) j["witness"] = detail::monomial_text(*r.witness, 'r', 's');
    j["tolerances"] = Json{{"conv", r.tolerances.conv},
                           {"kill", r.tolerances.kill},
                           {"round", r.tolerances.round},
                           {"max_den", r.tolerances.max_den}};
    return j;
}

inline Json endo_report_json(const EndoReport& r, const Json& endo) {
    Json limit = nullptr;
    if (r.verdict == Verdict::Converged) {
        limit = Json::object();
        for (const auto& [name, c] : r.coordinates) limit[name] = c.limit_text();
    }
    Json coords = Json::object();
    for (const auto& [name, c] : r.coordinates) {
        Json sub = report_json(c, nullptr, name);
        sub.erase("schema");
        sub.erase("endo");
        coords[name] = std::move(sub);
    }
    return Json{{"schema", json_schema},
                {"endo", endo},
                {"verdict", verdict_name(r.verdict)},
                {"limit", limit},
                {"coordinates", coords}};
}

inline Json transport_json(const TransportReport& t, const std::string& p, const std::string& q) {
    Json j = report_json(t.report, nullptr, Json::array({p, q}));
    j.erase("endo");
    j["standard"] = print_center(t.standard);
    j["matches_standard"] = t.matches_standard;
    return j;
}

namespace detail {

inline Json matrix_json(const DenseMatrix<Cyclo>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

inline Json matrix_approx_json(const DenseMatrix<Cyclo>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(complex_json(m(i, j).embed()));
        rows.push_back(row);
    }
    return rows;
}

inline Json matrix_approx_json(const DenseMatrix<std::complex<double>>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(complex_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace detail

inline Json rep_json(const MatRep<Cyclo>& r) {
    return Json{{"schema", json_schema},
                {"mode", "exact"},
                {"l", r.level},
                {"nilpotent", r.nilpotent},
                {"a", scalar_json(r.a)},
                {"b", scalar_json(r.b)},
                {"X", detail::matrix_json(r.X)},
                {"Y", detail::matrix_json(r.Y)},
                {"X_approx", detail::matrix_approx_json(r.X)},
                {"Y_approx", detail::matrix_approx_json(r.Y)},
                {"relations_hold", rep_is_exact_solution(r)}};
}

inline Json rep_json(const MatRep<std::complex<double>>& r) {
    return Json{{"schema", json_schema},
                {"mode", "numeric"},
                {"l", r.level},
                {"nilpotent", r.nilpotent},
                {"a", Json{{"approx", complex_json(r.a)}}},
                {"b", Json{{"approx", complex_json(r.b)}}},
                {"X_approx", detail::matrix_approx_json(r.X)},
                {"Y_approx", detail::matrix_approx_json(r.Y)},
                {"max_residual", rep_max_residual(r)}};
}

}  // namespace qweyl

#endif  // QWEYL_JSON_IO_HPP
