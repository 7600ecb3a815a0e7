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

#ifndef QCLCD_SEARCH_HPP
#define QCLCD_SEARCH_HPP

#include <climits>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qclcd/distance.hpp"
#include "qclcd/json_io.hpp"
#include "qclcd/lcd_check.hpp"

namespace qclcd {

struct Provenance {
    enum class Type { search, table };
    Type type = Type::search;
    std::uint64_t seed = 0;       // search
    std::uint64_t iteration = 0;  // search: index of the candidate in enumeration order
    std::string table;            // table: fixture group id
    std::string row;              // table: row label, e.g. "[30,15,7]_2"

    std::string to_string() const;
};

struct CodeRecord {
    CodeRecord(QCCode c, InnerProduct kind_)
        : code(std::move(c)), kind(kind_), n(code.length()), k(qc_dimension(code)) {}

    QCCode code;
    InnerProduct kind = InnerProduct::euclidean;
    unsigned n = 0, k = 0;
    std::optional<unsigned> d;  // absent when the distance was not computed
    bool theorem_lcd = false;
    std::optional<bool> oracle_lcd;
    Provenance provenance;
    std::optional<std::string> timestamp;
};

Json to_json(const CodeRecord& r);
CodeRecord record_from_json(const Json& j);

struct DegreeRange {
    int min = 0;
    int max = INT_MAX;
    bool contains(int d) const noexcept { return min <= d && d <= max; }
};

struct SearchConfig {
    FieldSpec field;
    unsigned m = 1;
    InnerProduct kind = InnerProduct::euclidean;
    DegreeRange g11_degree, g22_degree;
    enum class Strategy { exhaustive, random };
    Strategy strategy = Strategy::exhaustive;
    // random strategy: pairs with at most this many g12 choices are still enumerated in full
    std::uint64_t threshold = 1U << 16;
    std::uint64_t samples = 64;
    std::uint64_t seed = 1;
    std::uint64_t budget = kDefaultDistanceBudget;
    std::uint64_t max_candidates = 0;  // 0: no limit
    std::size_t batch = 256;
    unsigned threads = 1;  // 0: hardware concurrency
    bool oracle = true;
    bool timestamp = false;
    std::string output;   // JSONL, rewritten after every batch; empty: none
    std::string summary;  // CSV; empty: none
};

// Throws InvalidConfig or NotCoprimeQM.
void validate(const SearchConfig& cfg);
SearchConfig search_config_from_json(const Json& j);
Json to_json(const SearchConfig& cfg);

// Pulls candidate codes: divisor pairs (g11, g22) of x^m - 1 in canonical order, each with
// g12 = gcd(g11, g22) * h over all h of degree < deg g22 - deg gcd, or over seeded samples.
class CandidateGenerator {
public:
    explicit CandidateGenerator(const SearchConfig& cfg);

    std::optional<QCCode> next();
    // Position of the most recently returned candidate.
    std::uint64_t iteration() const noexcept { return emitted_ - 1; }

private:
    bool open_pair();

    SearchConfig cfg_;
    std::vector<Poly> a_, b_;
    std::size_t pair_ = 0;
    bool in_pair_ = false;
    Poly g_;
    unsigned free_ = 0;
    bool exhaustive_ = true;
    std::uint64_t count_ = 0, index_ = 0;
    std::mt19937_64 rng_;
    std::uint64_t emitted_ = 0;
};

// Total number of candidates, by walking the generator.
std::uint64_t count_candidates(const SearchConfig& cfg);

// Best code per dimension among those passing the theorem check, ordered by k.
std::vector<CodeRecord> run_search(const SearchConfig& cfg);

// One line per record.
std::string records_to_jsonl(const std::vector<CodeRecord>& records);
// Header n,k,d,kind,lcd,provenance.
std::string records_to_csv(const std::vector<CodeRecord>& records);

}  // namespace qclcd

#endif  // QCLCD_SEARCH_HPP
