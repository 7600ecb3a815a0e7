/*
   Copyright 2026 The qclcd Authors

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

#include "qclcd/json_io.hpp"

#include "qclcd/error.hpp"
#include "qclcd/parse.hpp"

namespace qclcd {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::FixtureParse, what); }

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
    try {
        return member(j, key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        bad(std::string("field \"") + key + "\": " + e.what());
    }
}

}  // namespace

Json to_json(const FieldSpec& f) {
    return Json{{"p", f.characteristic()}, {"k", f.degree()}, {"modulus", f.modulus()}};
}

Json to_json(const Poly& p) { return Json(p.coeffs()); }

Json to_json(const QCCode& c) {
    Json j{{"field", to_json(c.field())}, {"m", c.m()},          {"g11", to_json(c.g11())},
           {"g12", to_json(c.g12())},     {"g22", to_json(c.g22())}, {"origin", to_string(c.origin())}};
    if (c.original_g12() != c.g12()) j["original_g12"] = to_json(c.original_g12());
    return j;
}

Json to_json(const LcdReport& r) {
    Json conds = Json::array();
    for (const auto& c : r.conditions)
        conds.push_back({{"label", c.label}, {"passed", c.passed}, {"witness", to_json(c.witness)}});
    return Json{{"kind", to_string(r.kind)}, {"verdict", r.verdict}, {"path", to_string(r.path)}, {"conditions", conds}};
}

Json to_json(const Factorization& f) {
    Json fs = Json::array();
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        const auto& x = f.factors[i];
        fs.push_back({{"poly", to_json(x.poly)},
                      {"multiplicity", x.multiplicity},
                      {"tag", f.tag(i)},
                      {"partner", x.partner}});
    }
    return Json{{"field", to_json(f.field)}, {"mode", to_string(f.mode)}, {"unit", f.unit}, {"factors", fs}};
}

Json to_json(const Matrix& m) {
    return Json{{"field", to_json(m.field())}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", m.to_rows()}};
}

Json to_json(const DistanceResult& d) {
    return Json{{"weight", to_string(d.kind)},
                {"value", d.value},
                {"method", "exhaustive"},
                {"codewords", d.codewords},
                {"budget", d.budget}};
}

FieldSpec field_from_json(const Json& j) {
    if (j.is_string()) return parse_field_spec(j.get<std::string>());
    const auto p = get<std::uint64_t>(j, "p");
    const unsigned k = j.contains("k") ? get<unsigned>(j, "k") : 1U;
    std::vector<Coeff> modulus;
    if (j.contains("modulus")) {
        const Json& mj = j.at("modulus");
        if (mj.is_string())
            modulus = parse_poly_or_list(FieldSpec::prime(p), mj.get<std::string>()).coeffs();
        else
            modulus = get<std::vector<Coeff>>(j, "modulus");
    }
    return FieldSpec::make(p, k, std::move(modulus));
}

Poly poly_from_json(const FieldSpec& f, const Json& j) {
    if (j.is_string()) return parse_poly_or_list(f, j.get<std::string>());
    if (!j.is_array()) bad("polynomial must be a coefficient list or a string");
    std::vector<Coeff> c;
    for (const auto& v : j) {
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
            bad("coefficient " + v.dump() + " is not a nonnegative integer");
        c.push_back(v.get<Coeff>());
    }
    return Poly(f, std::move(c));
}

QCCode code_from_json(const Json& j) {
    const FieldSpec f = field_from_json(member(j, "field"));
    const auto m = get<unsigned>(j, "m");
    const Poly g11 = poly_from_json(f, member(j, "g11"));
    const std::string origin = j.contains("origin") ? get<std::string>(j, "origin") : "two-generator";
    if (origin == "one-generator") {
        const Poly g12 = poly_from_json(f, j.contains("original_g12") ? j.at("original_g12") : member(j, "g12"));
        return qc_from_one_generator(f, m, g11, g12);
    }
    if (origin != "two-generator") bad("unknown origin \"" + origin + "\"");
    if (j.contains("original_g12"))
        return qc_new_reduced(f, m, g11, poly_from_json(f, j.at("original_g12")), poly_from_json(f, member(j, "g22")));
    if (j.contains("reduce_g12") && get<bool>(j, "reduce_g12"))
        return qc_new_reduced(f, m, g11, poly_from_json(f, member(j, "g12")), poly_from_json(f, member(j, "g22")));
    return qc_new(f, m, g11, poly_from_json(f, member(j, "g12")), poly_from_json(f, member(j, "g22")));
}

LcdReport lcd_report_from_json(const FieldSpec& f, const Json& j) {
    LcdReport r;
    const auto kind = parse_inner_product(get<std::string>(j, "kind"));
    if (!kind) bad("unknown inner product kind");
    r.kind = *kind;
    r.verdict = get<bool>(j, "verdict");
    const auto path = get<std::string>(j, "path");
    if (path == "general") r.path = CheckPath::general;
    else if (path == "one-generator") r.path = CheckPath::one_generator;
    else if (path == "sufficient-only") r.path = CheckPath::sufficient_only;
    else bad("unknown check path \"" + path + "\"");
    for (const auto& c : member(j, "conditions"))
        r.conditions.push_back({get<std::string>(c, "label"), get<bool>(c, "passed"), poly_from_json(f, member(c, "witness"))});
    return r;
}

Factorization factorization_from_json(const Json& j) {
    Factorization r;
    r.field = field_from_json(member(j, "field"));
    const auto mode = get<std::string>(j, "mode");
    if (mode == "plain") r.mode = PairingMode::plain;
    else if (mode == "conjugate") r.mode = PairingMode::conjugate;
    else bad("unknown pairing mode \"" + mode + "\"");
    r.unit = get<Coeff>(j, "unit");
    for (const auto& x : member(j, "factors")) {
        const auto partner = get<std::size_t>(x, "partner");
        r.factors.push_back({poly_from_json(r.field, member(x, "poly")), get<unsigned>(x, "multiplicity"), false, partner});
    }
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
        if (r.factors[i].partner >= r.factors.size()) bad("partner index out of range");
        r.factors[i].self_paired = r.factors[i].partner == i;
    }
    return r;
}

Matrix matrix_from_json(const Json& j) {
    const FieldSpec f = field_from_json(member(j, "field"));
    const auto cols = get<std::size_t>(j, "cols");
    const auto rows = get<std::vector<std::vector<Coeff>>>(j, "entries");
    if (rows.size() != get<std::size_t>(j, "rows")) bad("row count does not match entries");
    return Matrix::from_rows(f, rows, cols);
}

DistanceResult distance_from_json(const Json& j) {
    DistanceResult d;
    const auto w = parse_weight_kind(get<std::string>(j, "weight"));
    if (!w) bad("unknown weight kind");
    d.kind = *w;
    d.value = get<unsigned>(j, "value");
    d.codewords = get<std::uint64_t>(j, "codewords");
    d.budget = get<std::uint64_t>(j, "budget");
    return d;
}

}  // namespace qclcd
