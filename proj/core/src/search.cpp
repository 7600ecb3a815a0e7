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

#include "qclcd/search.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "qclcd/error.hpp"
#include "qclcd/oracle.hpp"
#include "random.hpp"

namespace qclcd {

namespace {

[[noreturn]] void bad_config(const std::string& what) { throw Error(ErrorCode::InvalidConfig, what); }

WeightKind weight_for(InnerProduct kind) {
    return kind == InnerProduct::symplectic ? WeightKind::symplectic : WeightKind::hamming;
}

bool generators_less(const QCCode& a, const QCCode& b) {
    if (a.g11() != b.g11()) return a.g11() < b.g11();
    if (a.g12() != b.g12()) return a.g12() < b.g12();
    return a.g22() < b.g22();
}

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_atomically(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) bad_config("cannot write " + tmp);
        out << text;
    }
    std::filesystem::rename(tmp, path);
}

DegreeRange range_from_json(const Json& j, const char* key) {
    DegreeRange r;
    if (!j.contains(key)) return r;
    const Json& v = j.at(key);
    if (v.is_number_integer()) {
        r.min = r.max = v.get<int>();
    } else if (v.is_array() && v.size() == 2) {
        r.min = v[0].get<int>();
        r.max = v[1].get<int>();
    } else {
        bad_config(std::string(key) + " must be an integer or [min, max]");
    }
    return r;
}

}  // namespace

std::string Provenance::to_string() const {
    if (type == Type::search) return "search:seed=" + std::to_string(seed) + ":iteration=" + std::to_string(iteration);
    return "table:" + table + ":" + row;
}

Json to_json(const CodeRecord& r) {
    Json prov;
    if (r.provenance.type == Provenance::Type::search)
        prov = {{"type", "search"}, {"seed", r.provenance.seed}, {"iteration", r.provenance.iteration}};
    else
        prov = {{"type", "table"}, {"table", r.provenance.table}, {"row", r.provenance.row}};
    Json j{{"n", r.n}, {"k", r.k}};
    j["d"] = r.d ? Json(*r.d) : Json(nullptr);
    j["kind"] = to_string(r.kind);
    j["lcd"] = {{"theorem", r.theorem_lcd}, {"oracle", r.oracle_lcd ? Json(*r.oracle_lcd) : Json(nullptr)}};
    j["code"] = to_json(r.code);
    j["provenance"] = prov;
    if (r.timestamp) j["timestamp"] = *r.timestamp;
    return j;
}

CodeRecord record_from_json(const Json& j) {
    try {
        const auto kind = parse_inner_product(j.at("kind").get<std::string>());
        if (!kind) throw Error(ErrorCode::FixtureParse, "unknown kind in record");
        CodeRecord r(code_from_json(j.at("code")), *kind);
        r.n = j.at("n").get<unsigned>();
        r.k = j.at("k").get<unsigned>();
        if (!j.at("d").is_null()) r.d = j.at("d").get<unsigned>();
        r.theorem_lcd = j.at("lcd").at("theorem").get<bool>();
        if (!j.at("lcd").at("oracle").is_null()) r.oracle_lcd = j.at("lcd").at("oracle").get<bool>();
        const Json& p = j.at("provenance");
        if (p.at("type").get<std::string>() == "search") {
            r.provenance.type = Provenance::Type::search;
            r.provenance.seed = p.at("seed").get<std::uint64_t>();
            r.provenance.iteration = p.at("iteration").get<std::uint64_t>();
        } else {
            r.provenance.type = Provenance::Type::table;
            r.provenance.table = p.at("table").get<std::string>();
            r.provenance.row = p.at("row").get<std::string>();
        }
        if (j.contains("timestamp")) r.timestamp = j.at("timestamp").get<std::string>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::FixtureParse, std::string("malformed record: ") + e.what());
    }
}

void validate(const SearchConfig& cfg) {
    if (cfg.m == 0 || cfg.m % cfg.field.characteristic() == 0)
        throw Error(ErrorCode::NotCoprimeQM, "gcd(q, m) != 1 for q = " + std::to_string(cfg.field.order()) +
                                                 ", m = " + std::to_string(cfg.m));
    if (cfg.samples == 0) bad_config("samples must be at least 1");
    if (cfg.batch == 0) bad_config("batch must be at least 1");
    if (cfg.kind == InnerProduct::hermitian && !cfg.field.is_quadratic_extension())
        throw Error(ErrorCode::NotAQuadraticExtension, cfg.field.name() + " is not of the form GF(q^2)");
}

SearchConfig search_config_from_json(const Json& j) {
    SearchConfig c;
    try {
        if (!j.is_object()) bad_config("search config must be a JSON object");
        c.field = field_from_json(j.at("field"));
        c.m = j.at("m").get<unsigned>();
        if (j.contains("kind")) {
            const auto k = parse_inner_product(j.at("kind").get<std::string>());
            if (!k) bad_config("unknown kind " + j.at("kind").dump());
            c.kind = *k;
        }
        c.g11_degree = range_from_json(j, "g11_degree");
        c.g22_degree = range_from_json(j, "g22_degree");
        if (j.contains("g12")) {
            const Json& g = j.at("g12");
            const auto s = g.value("strategy", std::string("exhaustive"));
            if (s == "exhaustive") c.strategy = SearchConfig::Strategy::exhaustive;
            else if (s == "random") c.strategy = SearchConfig::Strategy::random;
            else bad_config("unknown g12 strategy \"" + s + "\"");
            c.threshold = g.value("threshold", c.threshold);
            c.samples = g.value("samples", c.samples);
            c.seed = g.value("seed", c.seed);
        }
        c.seed = j.value("seed", c.seed);
        c.budget = j.value("budget", c.budget);
        c.max_candidates = j.value("max_candidates", c.max_candidates);
        c.batch = j.value("batch", c.batch);
        c.threads = j.value("threads", c.threads);
        c.oracle = j.value("oracle", c.oracle);
        c.timestamp = j.value("timestamp", c.timestamp);
        c.output = j.value("output", c.output);
        c.summary = j.value("summary", c.summary);
    } catch (const nlohmann::json::exception& e) {
        bad_config(std::string("malformed search config: ") + e.what());
    }
    validate(c);
    return c;
}

Json to_json(const SearchConfig& c) {
    return Json{{"field", to_json(c.field)},
                {"m", c.m},
                {"kind", to_string(c.kind)},
                {"g11_degree", {c.g11_degree.min, c.g11_degree.max}},
                {"g22_degree", {c.g22_degree.min, c.g22_degree.max}},
                {"g12",
                 {{"strategy", c.strategy == SearchConfig::Strategy::exhaustive ? "exhaustive" : "random"},
                  {"threshold", c.threshold},
                  {"samples", c.samples},
                  {"seed", c.seed}}},
                {"budget", c.budget},
                {"max_candidates", c.max_candidates},
                {"batch", c.batch},
                {"threads", c.threads},
                {"oracle", c.oracle},
                {"timestamp", c.timestamp},
                {"output", c.output},
                {"summary", c.summary}};
}

CandidateGenerator::CandidateGenerator(const SearchConfig& cfg) : cfg_(cfg), g_(cfg.field) {
    validate(cfg_);
    const Factorization f = factor_xm_minus_1(cfg_.field, cfg_.m);
    std::vector<Poly> divisors = all_divisors(f);
    std::sort(divisors.begin(), divisors.end());
    for (const auto& d : divisors) {
        if (cfg_.g11_degree.contains(d.degree())) a_.push_back(d);
        if (cfg_.g22_degree.contains(d.degree())) b_.push_back(d);
    }
}

bool CandidateGenerator::open_pair() {
    if (pair_ >= a_.size() * b_.size()) return false;
    const Poly& a = a_[pair_ / b_.size()];
    const Poly& b = b_[pair_ % b_.size()];
    g_ = gcd(a, b);
    free_ = static_cast<unsigned>(b.degree() - g_.degree());
    const auto total = message_count(cfg_.field.order(), free_);
    exhaustive_ = cfg_.strategy == SearchConfig::Strategy::exhaustive || (total && *total <= cfg_.threshold);
    if (exhaustive_ && !total)
        bad_config("pair with " + std::to_string(free_) + " free g12 coefficients is too large to enumerate");
    count_ = exhaustive_ ? *total : cfg_.samples;
    index_ = 0;
    rng_.seed(detail::splitmix64(cfg_.seed ^ detail::splitmix64(pair_)));
    in_pair_ = true;
    return true;
}

std::optional<QCCode> CandidateGenerator::next() {
    if (cfg_.max_candidates != 0 && emitted_ >= cfg_.max_candidates) return std::nullopt;
    for (;;) {
        if (!in_pair_ && !open_pair()) return std::nullopt;
        if (index_ == count_) {
            in_pair_ = false;
            ++pair_;
            continue;
        }
        const std::uint64_t q = cfg_.field.order();
        std::vector<Coeff> h(free_);
        if (exhaustive_) {
            std::uint64_t t = index_;
            for (auto& c : h) {
                c = t % q;
                t /= q;
            }
        } else {
            for (auto& c : h) c = detail::uniform_below(rng_, q);
        }
        ++index_;
        const Poly& a = a_[pair_ / b_.size()];
        const Poly& b = b_[pair_ % b_.size()];
        QCCode c = qc_new(cfg_.field, cfg_.m, a, g_ * Poly(cfg_.field, std::move(h)), b);
        ++emitted_;
        return c;
    }
}

std::uint64_t count_candidates(const SearchConfig& cfg) {
    CandidateGenerator gen(cfg);
    std::uint64_t n = 0;
    while (gen.next()) ++n;
    return n;
}

namespace {

struct Evaluation {
    bool keep = false;
    bool lcd = false;
    unsigned k = 0;
    std::optional<unsigned> d;
};

Evaluation evaluate(const QCCode& c, const SearchConfig& cfg, unsigned floor) {
    Evaluation e;
    e.lcd = check(c, cfg.kind).verdict;
    e.k = qc_dimension(c);
    if (!e.lcd || e.k == 0) return e;
    const auto total = message_count(cfg.field.order(), e.k);
    if (total && *total <= cfg.budget) {
        e.d = min_distance_at_least(qc_generator_matrix(c), weight_for(cfg.kind), floor);
        if (!e.d) return e;
    }
    e.keep = true;
    return e;
}

bool better(const std::optional<unsigned>& d, const QCCode& c, const CodeRecord& cur) {
    if (d.has_value() != cur.d.has_value()) return d.has_value();
    if (d && *d != *cur.d) return *d > *cur.d;
    return generators_less(c, cur.code);
}

}  // namespace

std::vector<CodeRecord> run_search(const SearchConfig& cfg) {
    validate(cfg);
    CandidateGenerator gen(cfg);
    std::map<unsigned, CodeRecord> best;
    const unsigned threads = cfg.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : cfg.threads;

    const auto snapshot = [&] {
        std::vector<CodeRecord> out;
        for (const auto& [k, r] : best) out.push_back(r);
        return out;
    };
    const auto flush = [&] {
        if (!cfg.output.empty()) write_atomically(cfg.output, records_to_jsonl(snapshot()));
    };

    std::vector<QCCode> batch;
    std::vector<std::uint64_t> iters;
    const auto process = [&] {
        std::vector<unsigned> floors(batch.size(), 0);
        for (std::size_t i = 0; i < batch.size(); ++i) {
            const auto it = best.find(qc_dimension(batch[i]));
            if (it != best.end() && it->second.d) floors[i] = *it->second.d;
        }
        std::vector<Evaluation> ev(batch.size());
        if (threads <= 1 || batch.size() == 1) {
            for (std::size_t i = 0; i < batch.size(); ++i) ev[i] = evaluate(batch[i], cfg, floors[i]);
        } else {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back([&, t] {
                    for (std::size_t i = t; i < batch.size(); i += threads) ev[i] = evaluate(batch[i], cfg, floors[i]);
                });
        }
        for (std::size_t i = 0; i < batch.size(); ++i) {
            if (!ev[i].keep) continue;
            const auto it = best.find(ev[i].k);
            if (it != best.end() && !better(ev[i].d, batch[i], it->second)) continue;
            CodeRecord r(batch[i], cfg.kind);
            r.d = ev[i].d;
            r.theorem_lcd = true;
            if (cfg.oracle) r.oracle_lcd = hull_dim(batch[i], cfg.kind) == 0;
            r.provenance.type = Provenance::Type::search;
            r.provenance.seed = cfg.seed;
            r.provenance.iteration = iters[i];
            if (cfg.timestamp) r.timestamp = utc_now();
            best.insert_or_assign(ev[i].k, std::move(r));
        }
        batch.clear();
        iters.clear();
        flush();
    };

    while (auto c = gen.next()) {
        batch.push_back(std::move(*c));
        iters.push_back(gen.iteration());
        if (batch.size() == cfg.batch) process();
    }
    if (!batch.empty()) process();
    flush();
    auto out = snapshot();
    if (!cfg.summary.empty()) write_atomically(cfg.summary, records_to_csv(out));
    return out;
}

std::string records_to_jsonl(const std::vector<CodeRecord>& records) {
    std::string s;
    for (const auto& r : records) {
        s += to_json(r).dump();
        s += '\n';
    }
    return s;
}

std::string records_to_csv(const std::vector<CodeRecord>& records) {
    std::ostringstream out;
    out << "n,k,d,kind,lcd,provenance\n";
    for (const auto& r : records) {
        const bool lcd = r.theorem_lcd && r.oracle_lcd.value_or(true);
        out << r.n << ',' << r.k << ',' << (r.d ? std::to_string(*r.d) : "") << ',' << to_string(r.kind) << ','
            << (lcd ? "true" : "false") << ',' << r.provenance.to_string() << '\n';
    }
    return out.str();
}

}  // namespace qclcd
