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

#ifndef QCLCD_ERROR_HPP
#define QCLCD_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qclcd {

enum class ErrorCode {
    NonPrimeCharacteristic,
    ReducibleModulus,
    UnsupportedSize,
    FieldMismatch,
    DivisionByZero,
    InvalidPower,
    SyntaxError,
    OutOfRangeDigit,
    BothZero,
    ZeroPolynomial,
    DegreeExceedsM,
    NotAQuadraticExtension,
    NotCoprime,
    UnsupportedField,
    NotCoprimeQM,
    NotADivisor,
    DegreeViolation,
    GcdDivisibilityViolation,
    RankMismatch,
    BudgetExceeded,
    ZeroCode,
    FixtureParse,
    InvalidConfig,
};

std::string_view to_string(ErrorCode code) noexcept;

// All domain failures surface as this exception; code() is stable, what() carries detail.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace qclcd

#endif  // QCLCD_ERROR_HPP
