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

#include "qclcd/replicate.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>

#include "qclcd/error.hpp"
#include "qclcd/oracle.hpp"

namespace qclcd {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::FixtureParse, what); }

}  // namespace

std::vector<FixtureRow> fixtures_from_json(const Json& j) {
    const Json* rows = &j;
    if (j.is_object()) {
        if (!j.contains("codes")) bad("fixture object has no \"codes\" array");
        rows = &j.at("codes");
    }
    if (!rows->is_array()) bad("fixtures must be an array of rows");
    std::vector<FixtureRow> out;
    for (const auto& r : *rows) {
        FixtureRow f;
        try {
            f.table = r.value("table", std::string());
            f.label = r.at("label").get<std::string>();
            const auto kind = parse_inner_product(r.at("kind").get<std::string>());
            if (!kind) bad("row " + f.label + ": unknown kind");
            f.kind = *kind;
            f.weight = f.kind == InnerProduct::symplectic ? WeightKind::symplectic : WeightKind::hamming;
            if (r.contains("weight")) {
                const auto w = parse_weight_kind(r.at("weight").get<std::string>());
                if (!w) bad("row " + f.label + ": unknown weight");
                f.weight = *w;
            }
            f.code = r;
            f.n = r.at("n").get<unsigned>();
            f.k = r.at("k").get<unsigned>();
            if (r.contains("d") && !r.at("d").is_null()) f.d = r.at("d").get<unsigned>();
            for (const char* key : {"field", "m", "g11", "g12"})
                if (!r.contains(key)) bad("row " + f.label + ": missing \"" + key + "\"");
        } catch (const nlohmann::json::exception& e) {
            bad("malformed fixture row " + r.dump().substr(0, 80) + ": " + e.what());
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<FixtureRow> load_fixtures(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        bad(path + ": " + e.what());
    }
    return fixtures_from_json(j);
}

std::string_view to_string(RowStatus s) noexcept {
    switch (s) {
        case RowStatus::pass: return "pass";
        case RowStatus::pass_distance_skipped: return "pass-distance-skipped";
        case RowStatus::fail: return "fail";
    }
    return "?";
}

RowReport replicate_row(const FixtureRow& row, const ReplicationOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    RowReport r;
    r.table = row.table;
    r.label = row.label;
    r.kind = row.kind;
    r.claimed_d = row.d;
    const auto done = [&] {
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    };

    std::optional<QCCode> code;
    try {
        code = code_from_json(row.code);
    } catch (const Error& e) {
        r.error = e.what();
        r.diagnosis = "construction failed; transcription error suspected";
        return done();
    }
    r.dimension = qc_dimension(*code);
    r.dimension_ok = r.dimension == row.k && code->length() == row.n;
    r.theorem_lcd = check(*code, row.kind).verdict;
    r.hull = hull_dim(*code, row.kind);
    const bool oracle_lcd = r.hull == 0;

    bool ok = r.dimension_ok && r.theorem_lcd && oracle_lcd;
    if (r.theorem_lcd != oracle_lcd)
        r.diagnosis = "theorem and oracle disagree; implementation bug";
    else if (!r.theorem_lcd)
        r.diagnosis = "rejected by both theorem and oracle; transcription error suspected";
    else if (!r.dimension_ok)
        r.diagnosis = "dimension " + std::to_string(r.dimension) + " differs from claimed " + std::to_string(row.k) +
                      "; transcription error suspected";

    bool skipped = true;
    const auto total = message_count(code->field().order(), r.dimension);
    if (opt.distances && row.d && r.dimension > 0 && total && *total <= opt.budget) {
        r.distance = min_distance(*code, row.weight, opt.budget, opt.threads).value;
        r.distance_ok = *r.distance == *row.d;
        skipped = false;
        if (!r.distance_ok) {
            ok = false;
            if (r.diagnosis.empty())
                r.diagnosis = "distance " + std::to_string(*r.distance) + " differs from claimed " +
                              std::to_string(*row.d);
        }
    }
    r.status = !ok ? RowStatus::fail : skipped ? RowStatus::pass_distance_skipped : RowStatus::pass;
    return done();
}

ReplicationReport replicate_tables(const std::vector<FixtureRow>& rows, const ReplicationOptions& opt) {
    ReplicationReport rep;
    for (const auto& row : rows) {
        rep.rows.push_back(replicate_row(row, opt));
        const auto& r = rep.rows.back();
        switch (r.status) {
            case RowStatus::pass: ++rep.passed; break;
            case RowStatus::pass_distance_skipped: ++rep.skipped; break;
            case RowStatus::fail: ++rep.failed; break;
        }
        if (opt.on_row) opt.on_row(r);
    }
    return rep;
}

ReplicationReport replicate_tables(const std::string& path, const ReplicationOptions& opt) {
    return replicate_tables(load_fixtures(path), opt);
}

Json to_json(const RowReport& r) {
    Json j{{"table", r.table},
           {"label", r.label},
           {"kind", to_string(r.kind)},
           {"status", to_string(r.status)},
           {"dimension", r.dimension},
           {"dimension_ok", r.dimension_ok},
           {"theorem_lcd", r.theorem_lcd},
           {"hull", r.hull}};
    j["claimed_d"] = r.claimed_d ? Json(*r.claimed_d) : Json(nullptr);
    j["distance"] = r.distance ? Json(*r.distance) : Json("unverified");
    if (!r.error.empty()) j["error"] = r.error;
    if (!r.diagnosis.empty()) j["diagnosis"] = r.diagnosis;
    return j;
}

Json to_json(const ReplicationReport& r) {
    Json rows = Json::array();
    for (const auto& x : r.rows) rows.push_back(to_json(x));
    return Json{{"rows", rows}, {"passed", r.passed}, {"distance_skipped", r.skipped}, {"failed", r.failed}};
}

std::string format_report(const ReplicationReport& r) {
    std::string s;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-22s %-11s %-4s %-5s %-4s %-6s %s\n", "code", "kind", "k", "thm", "hull",
                  "d", "status");
    s += buf;
    for (const auto& x : r.rows) {
        const std::string d = x.distance ? std::to_string(*x.distance) : "-";
        std::snprintf(buf, sizeof buf, "%-22s %-11s %-4u %-5s %-4u %-6s %s", x.label.c_str(),
                      std::string(to_string(x.kind)).c_str(), x.dimension, x.theorem_lcd ? "lcd" : "no", x.hull,
                      d.c_str(), std::string(to_string(x.status)).c_str());
        s += buf;
        if (!x.diagnosis.empty()) s += "  (" + x.diagnosis + ")";
        if (!x.error.empty()) s += "  " + x.error;
        s += '\n';
    }
    std::snprintf(buf, sizeof buf, "%zu passed, %zu passed with distance skipped, %zu failed\n", r.passed, r.skipped,
                  r.failed);
    s += buf;
    return s;
}

}  // namespace qclcd
