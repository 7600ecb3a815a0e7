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

#ifndef QCLCD_DISTANCE_HPP
#define QCLCD_DISTANCE_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "qclcd/matrix.hpp"
#include "qclcd/qc_code.hpp"

namespace qclcd {

// symplectic: number of i < m with (v_i, v_{m+i}) != (0, 0) in block layout.
enum class WeightKind { hamming, symplectic };

std::string_view to_string(WeightKind w) noexcept;
std::optional<WeightKind> parse_weight_kind(std::string_view s) noexcept;

inline constexpr std::uint64_t kDefaultDistanceBudget = std::uint64_t{1} << 28;

struct DistanceResult {
    WeightKind kind = WeightKind::hamming;
    unsigned value = 0;
    std::uint64_t codewords = 0;  // nonzero codewords enumerated, q^k - 1
    std::uint64_t budget = kDefaultDistanceBudget;
    unsigned threads = 1;
    double seconds = 0;
};

// q^k, or nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> message_count(std::uint64_t q, unsigned k) noexcept;

// Exhaustive minimum weight over all nonzero codewords, walking the message space in a
// q-ary reflected order so that consecutive codewords differ by a multiple of one row.
// threads = 0 uses the hardware concurrency. Results do not depend on the thread count.
DistanceResult min_distance(const QCCode& c, WeightKind kind, std::uint64_t budget = kDefaultDistanceBudget,
                            unsigned threads = 1);

// Same on an explicit generator matrix with linearly independent rows.
DistanceResult min_distance(const Matrix& g, WeightKind kind, std::uint64_t budget = kDefaultDistanceBudget,
                            unsigned threads = 1);

// Exact minimum weight if it is at least floor; nullopt as soon as a lighter nonzero codeword
// turns up. Single-threaded, no budget check.
std::optional<unsigned> min_distance_at_least(const Matrix& g, WeightKind kind, unsigned floor);

}  // namespace qclcd

#endif  // QCLCD_DISTANCE_HPP
