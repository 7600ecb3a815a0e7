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

#include "qclcd/field.hpp"

#include <algorithm>
#include <limits>

#include "qclcd/parse.hpp"

namespace qclcd {

namespace {

using Digits = std::vector<std::uint64_t>;

void trim(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Polynomial helpers over GF(p) used only to validate moduli.
Digits mod_poly(Digits a, const Digits& f, std::uint64_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint64_t lead_inv = [&] {
        std::uint64_t r = 1, b = f.back(), e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }();
    while (a.size() > df) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t j = 0; j <= df; ++j) a[shift + j] = (a[shift + j] + (p - c) * f[j]) % p;
        trim(a);
    }
    return a;
}

Digits mul_poly(const Digits& a, const Digits& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Digits r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

Digits pow_mod(Digits base, std::uint64_t e, const Digits& f, std::uint64_t p) {
    Digits r{1};
    base = mod_poly(std::move(base), f, p);
    while (e) {
        if (e & 1) r = mod_poly(mul_poly(r, base, p), f, p);
        base = mod_poly(mul_poly(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

Digits gcd_poly(Digits a, Digits b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Digits r = mod_poly(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Rabin's test: f of degree k is irreducible iff x^(p^k) = x mod f and
// gcd(x^(p^(k/r)) - x, f) = 1 for every prime r dividing k.
bool is_irreducible(const Digits& f, std::uint64_t p) {
    const unsigned k = static_cast<unsigned>(f.size() - 1);
    if (k == 1) return true;
    std::vector<Digits> frob(k + 1);
    frob[0] = mod_poly({0, 1}, f, p);
    for (unsigned i = 1; i <= k; ++i) frob[i] = pow_mod(frob[i - 1], p, f, p);
    if (frob[k] != mod_poly({0, 1}, f, p)) return false;
    for (std::uint64_t r : prime_factors(k)) {
        Digits h = frob[k / r];
        h.resize(std::max<std::size_t>(h.size(), 2), 0);
        h[1] = (h[1] + p - 1) % p;
        trim(h);
        Digits g = gcd_poly(f, h, p);
        if (g.size() != 1) return false;
    }
    return true;
}

Digits unpack(Coeff a, std::uint64_t p, unsigned k) {
    Digits d(k, 0);
    for (unsigned i = 0; i < k; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

Coeff pack(const Digits& d, std::uint64_t p) {
    Coeff a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
    return a;
}

}  // namespace

namespace detail {

Coeff FieldData::add_digits(Coeff a, Coeff b) const noexcept {
    Coeff r = 0, place = 1;
    for (unsigned i = 0; i < k; ++i) {
        r += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    return r;
}

Coeff FieldData::neg_digits(Coeff a) const noexcept {
    Coeff r = 0, place = 1;
    for (unsigned i = 0; i < k; ++i) {
        const Coeff d = a % p;
        r += (d == 0 ? 0 : p - d) * place;
        a /= p;
        place *= p;
    }
    return r;
}

Coeff FieldData::mul_generic(Coeff a, Coeff b) const noexcept {
    Digits prod = mul_poly(unpack(a, p, k), unpack(b, p, k), p);
    prod = mod_poly(std::move(prod), modulus, p);
    prod.resize(k, 0);
    return pack(prod, p);
}

}  // namespace detail

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::make(std::uint64_t p, unsigned k, std::vector<Coeff> modulus, std::string symbol) {
    if (!is_prime(p)) throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    if (p >= (1u << 16)) throw Error(ErrorCode::UnsupportedSize, "characteristic must be below 2^16");
    if (k == 0) throw Error(ErrorCode::UnsupportedSize, "extension degree must be at least 1");

    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (q > std::numeric_limits<std::uint64_t>::max() / p)
            throw Error(ErrorCode::UnsupportedSize, "field order exceeds 64 bits");
        q *= p;
    }

    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->k = k;
    d->q = q;
    d->symbol = symbol.empty() ? "w" : std::move(symbol);

    if (!modulus.empty()) {
        for (Coeff c : modulus)
            if (c >= p) throw Error(ErrorCode::OutOfRangeDigit, "modulus coefficient " + std::to_string(c));
        trim(modulus);
        if (modulus.size() != k + 1)
            throw Error(ErrorCode::UnsupportedSize, "modulus degree does not match extension degree");
        // Normalize to monic.
        const Coeff lead = modulus.back();
        if (lead != 1) {
            std::uint64_t inv = 1, b = lead, e = p - 2;
            while (e) {
                if (e & 1) inv = inv * b % p;
                b = b * b % p;
                e >>= 1;
            }
            for (Coeff& c : modulus) c = c * inv % p;
        }
        if (!is_irreducible(modulus, p))
            throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
        if (k > 1) d->modulus = std::move(modulus);
    } else if (k > 1) {
        if (k > 16) throw Error(ErrorCode::UnsupportedSize, "automatic modulus selection supports k <= 16");
        // Counting upward with c_{k-1} as the most significant digit is lexicographic
        // order from x^{k-1} down to x^0.
        Digits cand(k + 1, 0);
        cand[k] = 1;
        bool found = false;
        for (std::uint64_t code = 0; code < q && !found; ++code) {
            Digits low = unpack(code, p, k);
            std::copy(low.begin(), low.end(), cand.begin());
            if (cand[0] != 0 && is_irreducible(cand, p)) found = true;
        }
        d->modulus = cand;
    }

    if (k > 1 && q <= (1u << 16)) {
        // Any primitive element gives log/exp tables; arithmetic stays in polynomial basis.
        const auto factors = prime_factors(q - 1);
        auto gpow = [&](Coeff a, std::uint64_t e) {
            Coeff r = 1;
            while (e) {
                if (e & 1) r = d->mul_generic(r, a);
                a = d->mul_generic(a, a);
                e >>= 1;
            }
            return r;
        };
        Coeff gen = 0;
        for (Coeff g = 2; g < q; ++g) {
            bool primitive = true;
            for (auto r : factors)
                if (gpow(g, (q - 1) / r) == 1) {
                    primitive = false;
                    break;
                }
            if (primitive) {
                gen = g;
                break;
            }
        }
        d->log.assign(q, 0);
        d->exp.assign(2 * (q - 1), 0);
        Coeff x = 1;
        for (std::uint64_t i = 0; i < q - 1; ++i) {
            d->exp[i] = static_cast<std::uint32_t>(x);
            d->exp[i + q - 1] = static_cast<std::uint32_t>(x);
            d->log[x] = static_cast<std::uint32_t>(i);
            x = d->mul_generic(x, gen);
        }
    }

    return FieldSpec(std::move(d));
}

std::string FieldSpec::name() const {
    if (d_->k == 1) return "GF(" + std::to_string(d_->p) + ")";
    return "GF(" + std::to_string(d_->p) + "^" + std::to_string(d_->k) + ")";
}

std::uint64_t FieldSpec::sub_order() const {
    if (!is_quadratic_extension())
        throw Error(ErrorCode::NotAQuadraticExtension, name() + " is not of the form GF(q^2)");
    std::uint64_t r = 1;
    for (unsigned i = 0; i < d_->k / 2; ++i) r *= d_->p;
    return r;
}

Coeff FieldSpec::from_integer(std::int64_t v) const noexcept {
    const auto p = static_cast<std::int64_t>(d_->p);
    return static_cast<Coeff>(((v % p) + p) % p);
}

Coeff FieldSpec::pow(Coeff a, std::uint64_t e) const noexcept {
    Coeff r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Coeff FieldSpec::inv(Coeff a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + name());
    if (!d_->exp.empty()) return d_->exp[(d_->q - 1 - d_->log[a]) % (d_->q - 1)];
    return pow(a, d_->q - 2);
}

Coeff FieldSpec::frobenius(Coeff a, std::uint64_t power) const {
    if (power == 0) throw Error(ErrorCode::InvalidPower, "power 0 is not a power of the characteristic");
    unsigned j = 0;
    while (power % d_->p == 0) {
        power /= d_->p;
        ++j;
    }
    if (power != 1) throw Error(ErrorCode::InvalidPower, "power is not a power of " + std::to_string(d_->p));
    for (unsigned i = 0; i < j % d_->k; ++i) a = pow(a, d_->p);
    return a;
}

Coeff FieldSpec::conjugate(Coeff a) const { return pow(a, sub_order()); }

std::vector<Coeff> FieldSpec::digits(Coeff a) const { return unpack(a, d_->p, d_->k); }

std::string FieldSpec::format(Coeff a) const {
    if (a == 0) return "0";
    if (d_->k == 1) return std::to_string(a);
    const Digits dg = digits(a);
    std::string out;
    for (unsigned i = d_->k; i-- > 0;) {
        if (dg[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(dg[i]);
            continue;
        }
        if (dg[i] != 1) out += std::to_string(dg[i]) + "*";
        out += d_->symbol;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

Coeff FieldSpec::parse(std::string_view text) const { return parse_element(*this, text); }

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
    if (!(a == b)) throw Error(ErrorCode::FieldMismatch, a.name() + " vs " + b.name());
}

FieldElement::FieldElement(FieldSpec field, Coeff value) : field_(std::move(field)), value_(value) {
    if (!field_.contains(value_))
        throw Error(ErrorCode::OutOfRangeDigit, std::to_string(value_) + " is not an element of " + field_.name());
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_.add(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_.sub(a.value_, b.value_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_.mul(a.value_, b.value_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_.div(a.value_, b.value_)};
}

}  // namespace qclcd
