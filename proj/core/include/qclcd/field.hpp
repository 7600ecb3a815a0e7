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

#ifndef QCLCD_FIELD_HPP
#define QCLCD_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qclcd/error.hpp"

namespace qclcd {

// Field elements are stored packed: the polynomial-basis coordinate vector
// (c0, c1, ..., c_{k-1}) over GF(p) is the integer c0 + c1*p + ... + c_{k-1}*p^{k-1}.
// In GF(4) = GF(2)[w]/(w^2+w+1) this gives 0, 1, w = 2, w^2 = w+1 = 3.
using Coeff = std::uint64_t;

namespace detail {

struct FieldData {
    std::uint64_t p = 2;
    unsigned k = 1;
    std::uint64_t q = 2;
    std::vector<Coeff> modulus;  // ascending coefficients over GF(p), monic, size k+1 (empty when k == 1)
    std::string symbol = "w";

    // Multiplication tables for extension fields of order <= 2^16.
    std::vector<std::uint32_t> log;
    std::vector<std::uint32_t> exp;  // length 2(q-1), so exp[log a + log b] needs no reduction

    Coeff add(Coeff a, Coeff b) const noexcept {
        if (k == 1) {
            Coeff s = a + b;
            return s >= p ? s - p : s;
        }
        if (p == 2) return a ^ b;
        return add_digits(a, b);
    }
    Coeff neg(Coeff a) const noexcept {
        if (k == 1) return a == 0 ? 0 : p - a;
        if (p == 2) return a;
        return neg_digits(a);
    }
    Coeff sub(Coeff a, Coeff b) const noexcept { return add(a, neg(b)); }
    Coeff mul(Coeff a, Coeff b) const noexcept {
        if (k == 1) return (a * b) % p;
        if (a == 0 || b == 0) return 0;
        if (!exp.empty()) return exp[log[a] + log[b]];
        return mul_generic(a, b);
    }

    Coeff add_digits(Coeff a, Coeff b) const noexcept;
    Coeff neg_digits(Coeff a) const noexcept;
    Coeff mul_generic(Coeff a, Coeff b) const noexcept;
};

}  // namespace detail

// Immutable description of GF(p^k); cheap to copy and safe to share across threads.
class FieldSpec {
public:
    // Builds GF(p^k). With an empty modulus, picks the smallest monic irreducible of
    // degree k (coefficients compared from x^{k-1} down to x^0).
    static FieldSpec make(std::uint64_t p, unsigned k = 1, std::vector<Coeff> modulus = {},
                          std::string symbol = "w");
    static FieldSpec prime(std::uint64_t p) { return make(p, 1); }

    FieldSpec() : FieldSpec(prime(2)) {}

    std::uint64_t characteristic() const noexcept { return d_->p; }
    unsigned degree() const noexcept { return d_->k; }
    std::uint64_t order() const noexcept { return d_->q; }
    const std::vector<Coeff>& modulus() const noexcept { return d_->modulus; }
    const std::string& symbol() const noexcept { return d_->symbol; }
    std::string name() const;

    bool is_quadratic_extension() const noexcept { return d_->k % 2 == 0; }
    // q for a field of order q^2.
    std::uint64_t sub_order() const;

    bool contains(Coeff a) const noexcept { return a < d_->q; }
    Coeff from_integer(std::int64_t v) const noexcept;

    Coeff add(Coeff a, Coeff b) const noexcept { return d_->add(a, b); }
    Coeff sub(Coeff a, Coeff b) const noexcept { return d_->sub(a, b); }
    Coeff neg(Coeff a) const noexcept { return d_->neg(a); }
    Coeff mul(Coeff a, Coeff b) const noexcept { return d_->mul(a, b); }
    Coeff inv(Coeff a) const;
    Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }
    Coeff pow(Coeff a, std::uint64_t e) const noexcept;

    // a^power where power = p^j; any other power is InvalidPower.
    Coeff frobenius(Coeff a, std::uint64_t power) const;
    // a -> a^q on GF(q^2).
    Coeff conjugate(Coeff a) const;

    std::string format(Coeff a) const;
    Coeff parse(std::string_view text) const;

    // Coordinates of a over GF(p), lowest power of the generator first.
    std::vector<Coeff> digits(Coeff a) const;

    const detail::FieldData& data() const noexcept { return *d_; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
        return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->k == b.d_->k && a.d_->modulus == b.d_->modulus);
    }

private:
    explicit FieldSpec(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::FieldData> d_;
};

void require_same_field(const FieldSpec& a, const FieldSpec& b);

class FieldElement {
public:
    FieldElement(FieldSpec field, Coeff value);

    const FieldSpec& field() const noexcept { return field_; }
    Coeff value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement inverse() const { return {field_, field_.inv(value_)}; }
    FieldElement frobenius(std::uint64_t power) const { return {field_, field_.frobenius(value_, power)}; }
    std::string to_string() const { return field_.format(value_); }

    static FieldElement parse(const FieldSpec& field, std::string_view text) {
        return {field, field.parse(text)};
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.value_ == b.value_ && a.field_ == b.field_;
    }

private:
    FieldSpec field_;
    Coeff value_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace qclcd

#endif  // QCLCD_FIELD_HPP
