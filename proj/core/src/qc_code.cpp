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

#include "qclcd/qc_code.hpp"

#include "qclcd/error.hpp"

namespace qclcd {

namespace {

void require_coprime(const FieldSpec& field, unsigned m) {
    if (m == 0) throw Error(ErrorCode::NotCoprimeQM, "block length m must be positive");
    if (m % field.characteristic() == 0)
        throw Error(ErrorCode::NotCoprimeQM,
                    "gcd(q, m) != 1 for q = " + std::to_string(field.order()) + ", m = " + std::to_string(m));
}

Poly require_divisor(const Poly& g, const Poly& xm1, std::string_view name) {
    if (g.is_zero() || !divides(g, xm1))
        throw Error(ErrorCode::NotADivisor, std::string(name) + " = " + g.to_string() + " does not divide " +
                                                xm1.to_string());
    return g.monic();
}

}  // namespace

std::string_view to_string(Origin o) noexcept {
    return o == Origin::two_generator ? "two-generator" : "one-generator";
}

QCCode qc_new(const FieldSpec& field, unsigned m, const Poly& g11, const Poly& g12, const Poly& g22) {
    require_same_field(field, g11.field());
    require_same_field(field, g12.field());
    require_same_field(field, g22.field());
    require_coprime(field, m);
    const Poly xm1 = Poly::x_pow_minus_one(field, m);
    Poly a = require_divisor(g11, xm1, "g11");
    Poly b = require_divisor(g22, xm1, "g22");
    if (g12.degree() >= b.degree())
        throw Error(ErrorCode::DegreeViolation, "deg g12 = " + std::to_string(g12.degree()) +
                                                    " is not below deg g22 = " + std::to_string(b.degree()));
    const Poly g = gcd(a, b);
    if (!divides(g, g12))
        throw Error(ErrorCode::GcdDivisibilityViolation,
                    "gcd(g11, g22) = " + g.to_string() + " does not divide g12 = " + g12.to_string());
    return QCCode(m, std::move(a), g12, std::move(b), Origin::two_generator, g12);
}

QCCode qc_new_reduced(const FieldSpec& field, unsigned m, const Poly& g11, const Poly& g12, const Poly& g22) {
    require_same_field(field, g22.field());
    require_coprime(field, m);
    const Poly b = require_divisor(g22, Poly::x_pow_minus_one(field, m), "g22");
    QCCode c = qc_new(field, m, g11, g12 % b, b);
    c.original_g12_ = g12;
    return c;
}

QCCode qc_from_one_generator(const FieldSpec& field, unsigned m, const Poly& g11, const Poly& g12) {
    require_same_field(field, g11.field());
    require_same_field(field, g12.field());
    require_coprime(field, m);
    const Poly xm1 = Poly::x_pow_minus_one(field, m);
    const Poly a = require_divisor(g11, xm1, "g11");
    const Poly g = gcd(a, g12);
    const Poly g22 = exact_div(xm1, exact_div(a, g));
    if (gcd(a, g22) != g)
        throw Error(ErrorCode::GcdDivisibilityViolation,
                    "gcd(g11, g22) = " + gcd(a, g22).to_string() + " differs from gcd(g11, g12) = " + g.to_string());
    QCCode c = qc_new(field, m, a, g12 % g22, g22);
    c.origin_ = Origin::one_generator;
    c.original_g12_ = g12;
    return c;
}

unsigned qc_dimension(const QCCode& c) noexcept {
    return 2 * c.m() - static_cast<unsigned>(c.g11().degree()) - static_cast<unsigned>(c.g22().degree());
}

Decomposition qc_decompose(const QCCode& c, PairingMode mode) {
    const FieldSpec& field = c.field();
    if (mode == PairingMode::conjugate && !field.is_quadratic_extension())
        throw Error(ErrorCode::NotAQuadraticExtension, field.name() + " is not of the form GF(q^2)");
    const auto mate = [mode](const Poly& f) { return mode == PairingMode::plain ? reciprocal(f) : conj_reciprocal(f); };

    Decomposition d;
    d.mode = mode;
    d.g = gcd(c.g11(), c.g22());
    d.g11p = exact_div(c.g11(), d.g);
    d.g22p = exact_div(c.g22(), d.g);
    d.l = exact_div(Poly::x_pow_minus_one(field, c.m()), lcm(c.g11(), c.g22()));
    d.r11 = gcd(d.g11p, mate(d.g11p));
    d.t11 = exact_div(d.g11p, d.r11);
    d.r22 = gcd(d.g22p, mate(d.g22p));
    d.t22 = exact_div(d.g22p, d.r22);
    return d;
}

std::vector<Coeff> cyclic_coeffs(const Poly& f, unsigned m, unsigned shift) {
    std::vector<Coeff> v(m, 0);
    const auto& fd = f.field().data();
    const auto& c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::size_t j = (i + shift) % m;
        v[j] = fd.add(v[j], c[i]);
    }
    return v;
}

Matrix qc_generator_matrix(const QCCode& c) {
    const unsigned m = c.m();
    const unsigned k1 = m - static_cast<unsigned>(c.g11().degree());
    const unsigned k2 = m - static_cast<unsigned>(c.g22().degree());
    Matrix g(c.field(), 0, 2 * m);
    std::vector<Coeff> row(2 * m);
    for (unsigned i = 0; i < k1; ++i) {
        const auto a = cyclic_coeffs(c.g11(), m, i);
        const auto b = cyclic_coeffs(c.g12(), m, i);
        std::copy(a.begin(), a.end(), row.begin());
        std::copy(b.begin(), b.end(), row.begin() + m);
        g.append_row(row);
    }
    std::fill(row.begin(), row.begin() + m, 0);
    for (unsigned i = 0; i < k2; ++i) {
        const auto b = cyclic_coeffs(c.g22(), m, i);
        std::copy(b.begin(), b.end(), row.begin() + m);
        g.append_row(row);
    }
    const std::size_t r = rank(g);
    if (r != qc_dimension(c))
        throw Error(ErrorCode::RankMismatch, "generator matrix has rank " + std::to_string(r) + ", expected " +
                                                 std::to_string(qc_dimension(c)));
    return g;
}

std::vector<std::size_t> interleave_permutation(unsigned m) {
    std::vector<std::size_t> p(2 * m);
    for (unsigned i = 0; i < m; ++i) {
        p[2 * i] = i;
        p[2 * i + 1] = m + i;
    }
    return p;
}

Matrix to_interleaved(const Matrix& block) {
    return block.permuted_columns(interleave_permutation(static_cast<unsigned>(block.cols() / 2)));
}

}  // namespace qclcd
