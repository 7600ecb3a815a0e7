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

#ifndef QCLCD_REPLICATE_HPP
#define QCLCD_REPLICATE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qclcd/search.hpp"

namespace qclcd {

// One transcribed table row: generators plus the claimed parameters.
struct FixtureRow {
    std::string table;  // group id
    std::string label;  // as printed, e.g. "[30,15,7]_2"
    InnerProduct kind = InnerProduct::euclidean;
    WeightKind weight = WeightKind::hamming;
    Json code;  // QCCode schema; polynomials may be strings
    unsigned n = 0, k = 0;
    std::optional<unsigned> d;
};

// Throws FixtureParse on unreadable files or schema violations.
std::vector<FixtureRow> load_fixtures(const std::string& path);
std::vector<FixtureRow> fixtures_from_json(const Json& j);

enum class RowStatus { pass, pass_distance_skipped, fail };
std::string_view to_string(RowStatus s) noexcept;

struct RowReport {
    std::string table, label;
    InnerProduct kind = InnerProduct::euclidean;
    RowStatus status = RowStatus::fail;
    std::string error;  // construction failure
    unsigned dimension = 0;
    bool dimension_ok = false;
    bool theorem_lcd = false;
    unsigned hull = 0;
    std::optional<unsigned> claimed_d, distance;
    bool distance_ok = false;
    // Empty on success. Otherwise names the likely cause: a row rejected by both the
    // theorem and the oracle points at the transcription, a split verdict at the code.
    std::string diagnosis;
    double seconds = 0;
};

struct ReplicationOptions {
    std::uint64_t budget = kDefaultDistanceBudget;
    unsigned threads = 1;
    bool distances = true;
    std::function<void(const RowReport&)> on_row;
};

struct ReplicationReport {
    std::vector<RowReport> rows;
    std::size_t passed = 0, skipped = 0, failed = 0;
};

RowReport replicate_row(const FixtureRow& row, const ReplicationOptions& opt);
ReplicationReport replicate_tables(const std::vector<FixtureRow>& rows, const ReplicationOptions& opt = {});
ReplicationReport replicate_tables(const std::string& path, const ReplicationOptions& opt = {});

Json to_json(const RowReport& r);
Json to_json(const ReplicationReport& r);
std::string format_report(const ReplicationReport& r);

}  // namespace qclcd

#endif  // QCLCD_REPLICATE_HPP
