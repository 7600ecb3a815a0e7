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

#ifndef QCLCD_PARSE_HPP
#define QCLCD_PARSE_HPP

#include <string_view>
#include <vector>

#include "qclcd/field.hpp"

namespace qclcd {

class Poly;

// Field element grammar: sums of "c", "w", "w^i", "c*w^i"; integers reduce mod p.
Coeff parse_element(const FieldSpec& field, std::string_view text);

// Polynomial expressions in x. Accepts sums, differences, products (explicit '*',
// juxtaposition, or parenthesized factors) and integer powers, so table entries such
// as "x^3(x+1)^2(x^4+x+1)" or "w^2*x^4+x^2+x+w" parse as written.
Poly parse_poly(const FieldSpec& field, std::string_view text);

// Either an expression as above or an ascending coefficient list "[a0, a1, ...]"
// of packed element values (each must be < q).
Poly parse_poly_or_list(const FieldSpec& field, std::string_view text);

// "p", "p^k" or "p^k:modulus", the modulus written in x over GF(p) or as a coefficient list.
FieldSpec parse_field_spec(std::string_view text);

}  // namespace qclcd

#endif  // QCLCD_PARSE_HPP
