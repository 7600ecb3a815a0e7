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

#include "qclcd/error.hpp"

namespace qclcd {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::UnsupportedSize: return "UnsupportedSize";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::InvalidPower: return "InvalidPower";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::OutOfRangeDigit: return "OutOfRangeDigit";
        case ErrorCode::BothZero: return "BothZero";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::DegreeExceedsM: return "DegreeExceedsM";
        case ErrorCode::NotAQuadraticExtension: return "NotAQuadraticExtension";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::UnsupportedField: return "UnsupportedField";
        case ErrorCode::NotCoprimeQM: return "NotCoprimeQM";
        case ErrorCode::NotADivisor: return "NotADivisor";
        case ErrorCode::DegreeViolation: return "DegreeViolation";
        case ErrorCode::GcdDivisibilityViolation: return "GcdDivisibilityViolation";
        case ErrorCode::RankMismatch: return "RankMismatch";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::ZeroCode: return "ZeroCode";
        case ErrorCode::FixtureParse: return "FixtureParse";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace qclcd
