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

#include "qclcd/lcd_check.hpp"

#include "qclcd/error.hpp"

namespace qclcd {

namespace {

ConditionResult self_paired(std::string label, const Poly& f, PairingMode mode) {
    const bool ok = mode == PairingMode::plain ? is_self_reciprocal(f) : is_self_conj_reciprocal(f);
    return {std::move(label), ok, f};
}

ConditionResult coprime(std::string label, const Poly& a, const Poly& b) {
    Poly d = gcd(a, b);
    const bool ok = d.is_one();
    return {std::move(label), ok, std::move(d)};
}

LcdReport finish(InnerProduct kind, CheckPath path, std::vector<ConditionResult> conds) {
    LcdReport r{kind, true, path, std::move(conds)};
    for (const auto& c : r.conditions) r.verdict = r.verdict && c.passed;
    return r;
}

void require_quadratic(const FieldSpec& field) {
    if (!field.is_quadratic_extension())
        throw Error(ErrorCode::NotAQuadraticExtension, field.name() + " is not of the form GF(q^2)");
}

}  // namespace

std::string_view to_string(InnerProduct k) noexcept {
    switch (k) {
        case InnerProduct::euclidean: return "euclidean";
        case InnerProduct::symplectic: return "symplectic";
        case InnerProduct::hermitian: return "hermitian";
    }
    return "?";
}

std::string_view to_string(CheckPath p) noexcept {
    switch (p) {
        case CheckPath::general: return "general";
        case CheckPath::one_generator: return "one-generator";
        case CheckPath::sufficient_only: return "sufficient-only";
    }
    return "?";
}

std::optional<InnerProduct> parse_inner_product(std::string_view s) noexcept {
    if (s == "euclidean") return InnerProduct::euclidean;
    if (s == "symplectic") return InnerProduct::symplectic;
    if (s == "hermitian") return InnerProduct::hermitian;
    return std::nullopt;
}

Poly combination(InnerProduct kind, const Poly& g11, const Poly& g12, unsigned m) {
    switch (kind) {
        case InnerProduct::euclidean: return g11 * transpose(g11, m) + g12 * transpose(g12, m);
        case InnerProduct::symplectic: return g11 * transpose(g12, m) - g12 * transpose(g11, m);
        case InnerProduct::hermitian: return g11 * conj_transpose(g11, m) + g12 * conj_transpose(g12, m);
    }
    return Poly(g11.field());
}

LcdReport check_euclidean(const QCCode& c) {
    const Decomposition d = qc_decompose(c, PairingMode::plain);
    return finish(InnerProduct::euclidean, CheckPath::general,
                  {self_paired("I", d.g, d.mode), self_paired("II", d.l, d.mode), coprime("III", d.t22, c.g12()),
                   coprime("IV", d.r22, combination(InnerProduct::euclidean, c.g11(), c.g12(), c.m()))});
}

LcdReport check_symplectic(const QCCode& c) {
    const Decomposition d = qc_decompose(c, PairingMode::plain);
    return finish(InnerProduct::symplectic, CheckPath::general,
                  {self_paired("I", d.g, d.mode), self_paired("II", d.l, d.mode), {"III", d.r11.is_one(), d.r11},
                   coprime("IV", d.r22, combination(InnerProduct::symplectic, c.g11(), c.g12(), c.m()))});
}

LcdReport check_hermitian(const QCCode& c) {
    require_quadratic(c.field());
    const Decomposition d = qc_decompose(c, PairingMode::conjugate);
    return finish(InnerProduct::hermitian, CheckPath::general,
                  {self_paired("I", d.g, d.mode), self_paired("II", d.l, d.mode), coprime("III", d.t22, c.g12()),
                   coprime("IV", d.r22, combination(InnerProduct::hermitian, c.g11(), c.g12(), c.m()))});
}

LcdReport check(const QCCode& c, InnerProduct kind) {
    switch (kind) {
        case InnerProduct::euclidean: return check_euclidean(c);
        case InnerProduct::symplectic: return check_symplectic(c);
        case InnerProduct::hermitian: return check_hermitian(c);
    }
    return {};
}

LcdReport check_one_generator(const FieldSpec& field, unsigned m, const Poly& g11, const Poly& g12,
                              InnerProduct kind) {
    if (kind == InnerProduct::hermitian) require_quadratic(field);
    require_same_field(field, g11.field());
    require_same_field(field, g12.field());
    if (m == 0 || m % field.characteristic() == 0)
        throw Error(ErrorCode::NotCoprimeQM,
                    "gcd(q, m) != 1 for q = " + std::to_string(field.order()) + ", m = " + std::to_string(m));
    const Poly xm1 = Poly::x_pow_minus_one(field, m);
    if (g11.is_zero() || !divides(g11, xm1))
        throw Error(ErrorCode::NotADivisor, "g11 = " + g11.to_string() + " does not divide " + xm1.to_string());
    const Poly b = g12.degree() > static_cast<int>(m) ? g12 % xm1 : g12;
    const Poly g = gcd(g11, b);
    return finish(kind, CheckPath::one_generator,
                  {coprime("gcd", exact_div(xm1, g), combination(kind, g11, b, m))});
}

LcdReport check_euclidean_one_generator(const FieldSpec& field, unsigned m, const Poly& g11, const Poly& g12) {
    return check_one_generator(field, m, g11, g12, InnerProduct::euclidean);
}

LcdReport check_symplectic_one_generator(const FieldSpec& field, unsigned m, const Poly& g11, const Poly& g12) {
    return check_one_generator(field, m, g11, g12, InnerProduct::symplectic);
}

LcdReport check_hermitian_one_generator(const FieldSpec& field, unsigned m, const Poly& g11, const Poly& g12) {
    return check_one_generator(field, m, g11, g12, InnerProduct::hermitian);
}

bool check_symplectic_sufficient(const QCCode& c) {
    const Poly g = gcd(c.g11(), c.g22());
    return gcd(c.g11(), reciprocal(c.g11())) == g && gcd(c.g22(), reciprocal(c.g22())) == g &&
           is_self_reciprocal(g) && is_self_reciprocal(c.g11() * c.g22());
}

}  // namespace qclcd
