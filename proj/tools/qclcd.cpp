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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qclcd/qclcd.hpp"

namespace {

using namespace qclcd;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CodeArgs {
    std::string field = "2";
    unsigned m = 0;
    std::string g11, g12 = "0", g22;
    std::string code_file;
    bool reduce_g12 = false;
};

struct Common {
    bool json = false;
    bool verbose = false;
    unsigned threads = 1;
};

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::FixtureParse, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::FixtureParse, path + ": " + e.what());
    }
}

void add_code_options(CLI::App* sub, CodeArgs& a, bool needs_g22 = true) {
    sub->add_option("--field", a.field, "q, p^k or p^k:modulus")->capture_default_str();
    sub->add_option("--m", a.m, "block length");
    auto* g11 = sub->add_option("--g11", a.g11, "first generator, algebraic or [coefficient list]");
    sub->add_option("--g12", a.g12, "coupling polynomial")->capture_default_str();
    if (needs_g22) {
        sub->add_option("--g22", a.g22, "second generator");
        sub->add_flag("--reduce-g12", a.reduce_g12, "replace g12 by g12 mod g22 (same code)");
    }
    auto* file = sub->add_option("--code", a.code_file, "code as JSON {field, m, g11, g12, g22, origin}");
    file->excludes(g11);
}

void add_common(CLI::App* sub, Common& c) {
    sub->add_flag("--json", c.json, "machine-readable output");
    sub->add_flag("-v,--verbose", c.verbose, "diagnostics on stderr");
    sub->add_option("--threads", c.threads, "worker threads, 0 = all cores")->capture_default_str();
}

FieldSpec field_of(const CodeArgs& a) { return parse_field_spec(a.field); }

void require_inline(const CodeArgs& a, bool needs_g22) {
    if (a.m == 0) throw UsageError("--m is required");
    if (a.g11.empty()) throw UsageError("--g11 is required");
    if (needs_g22 && a.g22.empty()) throw UsageError("--g22 is required (or pass --one-gen)");
}

QCCode load_code(const CodeArgs& a, bool one_gen) {
    if (!a.code_file.empty()) return code_from_json(read_json_file(a.code_file));
    require_inline(a, !one_gen);
    const FieldSpec f = field_of(a);
    const Poly g11 = parse_poly_or_list(f, a.g11);
    const Poly g12 = parse_poly_or_list(f, a.g12);
    if (one_gen) return qc_from_one_generator(f, a.m, g11, g12);
    const Poly g22 = parse_poly_or_list(f, a.g22);
    return a.reduce_g12 ? qc_new_reduced(f, a.m, g11, g12, g22) : qc_new(f, a.m, g11, g12, g22);
}

std::string format_matrix(const Matrix& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ' ';
            s += m.field().format(m(i, j));
        }
        s += '\n';
    }
    return s;
}

void dump_matrix(const Common& c, const char* what, const Matrix& m) {
    if (c.verbose) std::cerr << what << ": " << to_json(m).dump() << '\n';
}

int cmd_factor(const CodeArgs& a, const std::string& mode, std::uint64_t seed, const Common& c) {
    if (a.m == 0) throw UsageError("--m is required");
    const FieldSpec f = field_of(a);
    const Factorization fz =
        factor_xm_minus_1(f, a.m, mode == "conjugate" ? PairingMode::conjugate : PairingMode::plain, seed);
    if (c.json) {
        Json j = to_json(fz);
        j["m"] = a.m;
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << Poly::x_pow_minus_one(f, a.m).to_string() << " over " << f.name() << ": " << fz.factors.size()
              << " irreducible factors\n";
    for (std::size_t i = 0; i < fz.factors.size(); ++i) {
        const auto& x = fz.factors[i];
        std::cout << "  [" << i << "] " << x.poly.to_string() << "  " << fz.tag(i);
        if (!x.self_paired) std::cout << " with [" << x.partner << "]";
        std::cout << '\n';
    }
    return 0;
}

void print_report(const LcdReport& r, std::ostream& out) {
    out << to_string(r.kind) << " LCD: " << (r.verdict ? "yes" : "no") << "  (" << to_string(r.path) << ")\n";
    for (const auto& c : r.conditions)
        out << "  " << c.label << (c.label.size() < 4 ? std::string(4 - c.label.size(), ' ') : " ")
            << (c.passed ? "pass" : "FAIL") << "  " << c.witness.to_string() << '\n';
}

int cmd_check(const CodeArgs& a, const std::string& kind_s, bool one_gen, const Common& c) {
    const auto kind = parse_inner_product(kind_s);
    LcdReport r;
    if (one_gen) {
        FieldSpec f;
        unsigned m;
        Poly g11, g12;
        if (!a.code_file.empty()) {
            const QCCode code = code_from_json(read_json_file(a.code_file));
            f = code.field();
            m = code.m();
            g11 = code.g11();
            g12 = code.original_g12();
        } else {
            require_inline(a, false);
            f = field_of(a);
            m = a.m;
            g11 = parse_poly_or_list(f, a.g11);
            g12 = parse_poly_or_list(f, a.g12);
        }
        r = check_one_generator(f, m, g11, g12, *kind);
    } else {
        r = check(load_code(a, false), *kind);
    }
    if (c.json)
        std::cout << to_json(r).dump(2) << '\n';
    else
        print_report(r, std::cout);
    return 0;
}

int cmd_dim(const CodeArgs& a, bool one_gen, const Common& c) {
    const QCCode code = load_code(a, one_gen);
    if (c.json)
        std::cout << Json{{"n", code.length()}, {"k", qc_dimension(code)}, {"code", to_json(code)}}.dump(2) << '\n';
    else
        std::cout << "n = " << code.length() << ", k = " << qc_dimension(code) << '\n';
    return 0;
}

int cmd_expand(const CodeArgs& a, bool one_gen, bool interleaved, const Common& c) {
    const QCCode code = load_code(a, one_gen);
    Matrix g = qc_generator_matrix(code);
    if (interleaved) g = to_interleaved(g);
    if (c.json)
        std::cout << to_json(g).dump(2) << '\n';
    else
        std::cout << format_matrix(g);
    return 0;
}

int cmd_hull(const CodeArgs& a, bool one_gen, const std::string& kind_s, const Common& c) {
    const QCCode code = load_code(a, one_gen);
    const auto kind = *parse_inner_product(kind_s);
    if (c.verbose) {
        const Matrix g = qc_generator_matrix(code);
        dump_matrix(c, "generator", g);
        dump_matrix(c, "gram", gram_matrix(g, kind));
    }
    const unsigned h = hull_dim(code, kind);
    if (c.json)
        std::cout << Json{{"kind", to_string(kind)}, {"hull", h}, {"lcd", h == 0}}.dump(2) << '\n';
    else
        std::cout << to_string(kind) << " hull dimension: " << h << (h == 0 ? " (LCD)" : "") << '\n';
    return 0;
}

int cmd_distance(const CodeArgs& a, bool one_gen, const std::string& weight_s, std::uint64_t budget,
                 const Common& c) {
    const QCCode code = load_code(a, one_gen);
    const auto weight = *parse_weight_kind(weight_s);
    if (c.verbose) dump_matrix(c, "generator", qc_generator_matrix(code));
    const DistanceResult d = min_distance(code, weight, budget, c.threads);
    if (c.verbose) std::cerr << "threads " << d.threads << ", " << d.seconds << " s\n";
    if (c.json)
        std::cout << to_json(d).dump(2) << '\n';
    else
        std::cout << "[" << code.length() << "," << qc_dimension(code) << "," << d.value << "] " << to_string(weight)
                  << " weight, " << d.codewords << " nonzero codewords\n";
    return 0;
}

int cmd_search(const std::string& config, const std::string& output, const Common& c, bool threads_set) {
    SearchConfig cfg = search_config_from_json(read_json_file(config));
    if (!output.empty()) cfg.output = output;
    if (threads_set) cfg.threads = c.threads;
    const auto records = run_search(cfg);
    std::cout << (c.json ? records_to_jsonl(records) : records_to_csv(records));
    return 0;
}

int cmd_replicate(const std::string& fixtures, std::uint64_t budget, bool no_distance, const Common& c) {
    ReplicationOptions opt;
    opt.budget = budget;
    opt.threads = c.threads;
    opt.distances = !no_distance;
    if (c.verbose)
        opt.on_row = [](const RowReport& r) {
            std::cerr << r.label << ": " << to_string(r.status) << " (" << r.seconds << " s)\n";
        };
    const ReplicationReport rep = replicate_tables(fixtures, opt);
    if (c.json)
        std::cout << to_json(rep).dump(2) << '\n';
    else
        std::cout << format_report(rep);
    return rep.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Index-2 quasi-cyclic LCD codes: criteria, hull oracle, distances and search"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", "qclcd 1.0.0");

    CodeArgs a;
    Common common;
    std::string kind = "euclidean", weight = "hamming", mode = "plain", config, output, fixtures = "data/known_codes.json";
    bool one_gen = false, interleaved = false, no_distance = false;
    std::uint64_t seed = kDefaultFactorSeed, budget = kDefaultDistanceBudget;
    const std::vector<std::string> kinds{"euclidean", "symplectic", "hermitian"};

    auto* factor = app.add_subcommand("factor", "factor x^m-1 with reciprocal pairing tags");
    factor->add_option("--field", a.field, "q, p^k or p^k:modulus")->capture_default_str();
    factor->add_option("--m", a.m, "block length")->required();
    factor->add_option("--mode", mode, "plain or conjugate pairing")
        ->check(CLI::IsMember({"plain", "conjugate"}))
        ->capture_default_str();
    factor->add_option("--seed", seed, "seed for equal-degree splitting");
    add_common(factor, common);

    auto* check = app.add_subcommand("check", "evaluate the polynomial LCD criterion");
    add_code_options(check, a);
    check->add_option("--kind", kind, "euclidean, symplectic or hermitian")
        ->check(CLI::IsMember(kinds))
        ->capture_default_str();
    check->add_flag("--one-gen", one_gen, "single generator (g11, g12)");
    add_common(check, common);

    auto* dim = app.add_subcommand("dim", "dimension of the code");
    add_code_options(dim, a);
    dim->add_flag("--one-gen", one_gen, "single generator (g11, g12)");
    add_common(dim, common);

    auto* expand = app.add_subcommand("expand", "print the generator matrix");
    add_code_options(expand, a);
    expand->add_flag("--one-gen", one_gen, "single generator (g11, g12)");
    expand->add_flag("--interleaved", interleaved, "interleave the two blocks");
    add_common(expand, common);

    auto* hull = app.add_subcommand("hull", "hull dimension by linear algebra");
    add_code_options(hull, a);
    hull->add_option("--kind", kind, "euclidean, symplectic or hermitian")
        ->check(CLI::IsMember(kinds))
        ->capture_default_str();
    hull->add_flag("--one-gen", one_gen, "single generator (g11, g12)");
    add_common(hull, common);

    auto* distance = app.add_subcommand("distance", "exhaustive minimum distance");
    add_code_options(distance, a);
    distance->add_option("--weight", weight, "hamming or symplectic")
        ->check(CLI::IsMember({"hamming", "symplectic"}))
        ->capture_default_str();
    distance->add_option("--budget", budget, "maximum number of messages q^k")->capture_default_str();
    distance->add_flag("--one-gen", one_gen, "single generator (g11, g12)");
    add_common(distance, common);

    auto* search = app.add_subcommand("search", "search for LCD codes");
    search->add_option("--config", config, "search configuration JSON")->required()->check(CLI::ExistingFile);
    search->add_option("--output", output, "JSONL output path, overrides the config");
    add_common(search, common);

    auto* replicate = app.add_subcommand("replicate", "verify transcribed table rows");
    replicate->add_option("--fixtures", fixtures, "fixture JSON")->capture_default_str();
    replicate->add_option("--budget", budget, "distance budget q^k")->capture_default_str();
    replicate->add_flag("--no-distance", no_distance, "skip distance computations");
    add_common(replicate, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (factor->parsed()) return cmd_factor(a, mode, seed, common);
        if (check->parsed()) return cmd_check(a, kind, one_gen, common);
        if (dim->parsed()) return cmd_dim(a, one_gen, common);
        if (expand->parsed()) return cmd_expand(a, one_gen, interleaved, common);
        if (hull->parsed()) return cmd_hull(a, one_gen, kind, common);
        if (distance->parsed()) return cmd_distance(a, one_gen, weight, budget, common);
        if (search->parsed()) return cmd_search(config, output, common, search->count("--threads") > 0);
        if (replicate->parsed()) return cmd_replicate(fixtures, budget, no_distance, common);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\nRun with --help for the flag grammar.\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n  input:";
        for (int i = 1; i < argc; ++i) std::cerr << ' ' << argv[i];
        std::cerr << '\n';
        return 1;
    }
    return 2;
}
