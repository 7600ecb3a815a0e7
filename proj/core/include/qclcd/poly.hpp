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

#ifndef QCLCD_POLY_HPP
#define QCLCD_POLY_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "qclcd/field.hpp"

namespace qclcd {

// Dense univariate polynomial over a FieldSpec. coeffs()[i] is the coefficient of x^i;
// the vector never carries trailing zeros, so the zero polynomial is empty.
class Poly {
public:
    // deg(0); compares below every real degree.
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    // Zero polynomial over GF(2).
    Poly() = default;
    explicit Poly(FieldSpec field) : field_(std::move(field)) {}
    Poly(FieldSpec field, std::vector<Coeff> coeffs);

    static Poly constant(const FieldSpec& field, Coeff c);
    static Poly monomial(const FieldSpec& field, Coeff c, unsigned degree);
    static Poly x_pow_minus_one(const FieldSpec& field, unsigned m);

    const FieldSpec& field() const noexcept { return field_; }
    const std::vector<Coeff>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    Coeff coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    Coeff leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

    Poly monic() const;
    Poly scaled(Coeff c) const;
    Poly shifted(unsigned k) const;
    Poly derivative() const;
    Coeff evaluate(Coeff x) const noexcept;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    friend bool operator==(const Poly& a, const Poly& b) noexcept { return a.c_ == b.c_ && a.field_ == b.field_; }
    // Canonical order: by degree, then coefficients from the highest power down.
    friend bool operator<(const Poly& a, const Poly& b) noexcept;

    // Descending powers, unit coefficients omitted: "x^4+w*x^3+x^2+w*x+1".
    std::string to_string() const;

private:
    void trim() noexcept;

    FieldSpec field_;
    std::vector<Coeff> c_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

DivMod divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
// a / b, throwing NotADivisor when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

// Monic gcd; gcd(f, 0) = monic(f).
Poly gcd(const Poly& a, const Poly& b);
// Monic lcm of two nonzero polynomials.
Poly lcm(const Poly& a, const Poly& b);
Poly powmod(Poly base, std::uint64_t e, const Poly& mod);

// f* = x^deg f * f(1/x).
Poly reciprocal(const Poly& f);
// f-bar = x^m * f(1/x) = x^(m - deg f) f*; transpose(0, m) = 0.
Poly transpose(const Poly& f, unsigned m);
// Coefficient-wise a -> a^q on GF(q^2).
Poly conjugate(const Poly& f);
// f-dagger = (f*)^[q].
Poly conj_reciprocal(const Poly& f);
// f-hat = x^(m - deg f) f-dagger; conj_transpose(0, m) = 0.
Poly conj_transpose(const Poly& f, unsigned m);

bool is_associate(const Poly& a, const Poly& b);
bool is_self_reciprocal(const Poly& f);
bool is_self_conj_reciprocal(const Poly& f);

}  // namespace qclcd

#endif  // QCLCD_POLY_HPP
