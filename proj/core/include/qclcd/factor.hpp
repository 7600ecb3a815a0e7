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

#ifndef QCLCD_FACTOR_HPP
#define QCLCD_FACTOR_HPP

#include <cstdint>
#include <iterator>
#include <string_view>
#include <vector>

#include "qclcd/poly.hpp"

namespace qclcd {

// plain pairs f with f*; conjugate pairs f with f-dagger (fields of order q^2 only).
enum class PairingMode { plain, conjugate };

std::string_view to_string(PairingMode mode) noexcept;

inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eed'f00d'cafe'0001ULL;

struct Factor {
    Poly poly;
    unsigned multiplicity = 1;
    bool self_paired = true;  // self-reciprocal, or self-conjugate-reciprocal in conjugate mode
    std::size_t partner = 0;  // index of the associate of f* (or f-dagger); equals own index when self-paired
};

struct Factorization {
    FieldSpec field;
    PairingMode mode = PairingMode::plain;
    Coeff unit = 1;
    std::vector<Factor> factors;

    // unit * prod(f_i^e_i)
    Poly product() const;
    // "self-reciprocal", "reciprocal-pair", "self-conjugate-reciprocal" or "conjugate-pair".
    std::string_view tag(std::size_t i) const noexcept;
};

// Monic irreducible factors of a monic squarefree polynomial, in canonical order.
// Distinct-degree splitting followed by seeded equal-degree (Cantor-Zassenhaus) splitting.
std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t seed = kDefaultFactorSeed);

bool is_irreducible(const Poly& f);

// Complete factorization of x^m - 1 with pairing tags. Requires gcd(q, m) = 1.
Factorization factor_xm_minus_1(const FieldSpec& field, unsigned m, PairingMode mode = PairingMode::plain,
                                std::uint64_t seed = kDefaultFactorSeed);

// Lazily enumerates the 2^t monic divisors of a squarefree factorization. Divisor i is the
// product of the factors whose bit is set in i, so 1 comes first and the full product last.
class DivisorRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Poly;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = Poly;

        iterator(const Factorization* f, std::uint64_t mask) : f_(f), mask_(mask) {}
        Poly operator*() const;
        iterator& operator++() {
            ++mask_;
            return *this;
        }
        iterator operator++(int) {
            auto t = *this;
            ++mask_;
            return t;
        }
        friend bool operator==(const iterator& a, const iterator& b) noexcept { return a.mask_ == b.mask_; }
        friend bool operator!=(const iterator& a, const iterator& b) noexcept { return a.mask_ != b.mask_; }

    private:
        const Factorization* f_;
        std::uint64_t mask_;
    };

    explicit DivisorRange(const Factorization& f);

    iterator begin() const { return {f_, 0}; }
    iterator end() const { return {f_, count_}; }
    std::uint64_t size() const noexcept { return count_; }
    Poly at(std::uint64_t mask) const { return *iterator(f_, mask); }

private:
    const Factorization* f_;
    std::uint64_t count_;
};

DivisorRange divisors_of(const Factorization& f);
std::vector<Poly> all_divisors(const Factorization& f);

}  // namespace qclcd

#endif  // QCLCD_FACTOR_HPP
