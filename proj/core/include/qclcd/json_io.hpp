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

#ifndef QCLCD_JSON_IO_HPP
#define QCLCD_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "qclcd/distance.hpp"
#include "qclcd/factor.hpp"
#include "qclcd/lcd_check.hpp"
#include "qclcd/matrix.hpp"
#include "qclcd/qc_code.hpp"

namespace qclcd {

using Json = nlohmann::ordered_json;

// Polynomials serialize as ascending coefficient lists of packed element values.
Json to_json(const FieldSpec& f);
Json to_json(const Poly& p);
Json to_json(const QCCode& c);
Json to_json(const LcdReport& r);
Json to_json(const Factorization& f);
Json to_json(const Matrix& m);
Json to_json(const DistanceResult& d);

// {"p": 2, "k": 2, "modulus": [1, 1, 1]} or a string accepted by parse_field_spec.
FieldSpec field_from_json(const Json& j);
// Coefficient list, or an algebraic string.
Poly poly_from_json(const FieldSpec& f, const Json& j);
// {field, m, g11, g12, g22, origin}; one-generator codes may omit g22 and are rebuilt from
// (g11, original_g12) when present, otherwise from (g11, g12). Two-generator codes with
// original_g12, or with "reduce_g12": true, go through qc_new_reduced.
QCCode code_from_json(const Json& j);
LcdReport lcd_report_from_json(const FieldSpec& f, const Json& j);
Factorization factorization_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
DistanceResult distance_from_json(const Json& j);

}  // namespace qclcd

#endif  // QCLCD_JSON_IO_HPP
