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

#ifndef QCLCD_LCD_CHECK_HPP
#define QCLCD_LCD_CHECK_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qclcd/qc_code.hpp"

namespace qclcd {

enum class InnerProduct { euclidean, symplectic, hermitian };
enum class CheckPath { general, one_generator, sufficient_only };

std::string_view to_string(InnerProduct k) noexcept;
std::string_view to_string(CheckPath p) noexcept;
std::optional<InnerProduct> parse_inner_product(std::string_view s) noexcept;

struct ConditionResult {
    std::string label;  // "I".."IV", or "gcd" on the one-generator path
    bool passed = false;
    // Failed: the nontrivial gcd, the polynomial that is not self-(conjugate-)reciprocal, or r11.
    // Passed: the evaluated gcd (1) or the polynomial that was tested.
    Poly witness;
};

struct LcdReport {
    InnerProduct kind = InnerProduct::euclidean;
    bool verdict = false;
    CheckPath path = CheckPath::general;
    std::vector<ConditionResult> conditions;
};

// g11*g11bar + g12*g12bar (euclidean), g11*g12bar - g12*g11bar (symplectic),
// g11*g11hat + g12*g12hat (hermitian); bars and hats taken relative to m, no reduction mod x^m-1.
Poly combination(InnerProduct kind, const Poly& g11, const Poly& g12, unsigned m);

LcdReport check_euclidean(const QCCode& c);
LcdReport check_symplectic(const QCCode& c);
LcdReport check_hermitian(const QCCode& c);
LcdReport check(const QCCode& c, InnerProduct kind);

LcdReport check_euclidean_one_generator(const FieldSpec& field, unsigned m, const Poly& g11, const Poly& g12);
LcdReport check_symplectic_one_generator(const FieldSpec& field, unsigned m, const Poly& g11, const Poly& g12);
LcdReport check_hermitian_one_generator(const FieldSpec& field, unsigned m, const Poly& g11, const Poly& g12);
LcdReport check_one_generator(const FieldSpec& field, unsigned m, const Poly& g11, const Poly& g12,
                              InnerProduct kind);

// Sufficient condition for symplectic LCD: gcd(g11, g22) = gcd(g11, g11*) = gcd(g22, g22*) is
// self-reciprocal and g11*g22 is self-reciprocal. false means inconclusive.
bool check_symplectic_sufficient(const QCCode& c);

}  // namespace qclcd

#endif  // QCLCD_LCD_CHECK_HPP
