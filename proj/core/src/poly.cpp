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

#include "qclcd/poly.hpp"

#include <algorithm>

namespace qclcd {

Poly::Poly(FieldSpec field, std::vector<Coeff> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (Coeff c : c_)
        if (!field_.contains(c))
            throw Error(ErrorCode::OutOfRangeDigit,
                        "coefficient " + std::to_string(c) + " is not an element of " + field_.name());
    trim();
}

Poly Poly::constant(const FieldSpec& field, Coeff c) { return Poly(field, {c}); }

Poly Poly::monomial(const FieldSpec& field, Coeff c, unsigned degree) {
    std::vector<Coeff> v(degree + 1, 0);
    v[degree] = c;
    return Poly(field, std::move(v));
}

Poly Poly::x_pow_minus_one(const FieldSpec& field, unsigned m) {
    std::vector<Coeff> v(m + 1, 0);
    v[m] = 1;
    v[0] = field.add(v[0], field.neg(1));
    return Poly(field, std::move(v));
}

void Poly::trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
    if (c_.empty() || c_.back() == 1) return *this;
    return scaled(field_.inv(c_.back()));
}

Poly Poly::scaled(Coeff c) const {
    Poly r(field_);
    if (c == 0) return r;
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = field_.mul(c_[i], c);
    r.trim();
    return r;
}

Poly Poly::shifted(unsigned k) const {
    Poly r(field_);
    if (c_.empty()) return r;
    r.c_.assign(k, 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::derivative() const {
    Poly r(field_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = field_.mul(c_[i], field_.from_integer(static_cast<std::int64_t>(i % field_.characteristic())));
    r.trim();
    return r;
}

Coeff Poly::evaluate(Coeff x) const noexcept {
    Coeff acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (Coeff& c : r.c_) c = field_.neg(c);
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    require_same_field(field_, rhs.field_);
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0);
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] = field_.add(c_[i], rhs.c_[i]);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    require_same_field(field_, rhs.field_);
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0);
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] = field_.sub(c_[i], rhs.c_[i]);
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    Poly r(a.field_);
    if (a.c_.empty() || b.c_.empty()) return r;
    const FieldSpec& f = a.field_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        const Coeff ai = a.c_[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = f.add(r.c_[i + j], f.mul(ai, b.c_[j]));
    }
    r.trim();
    return r;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

bool operator<(const Poly& a, const Poly& b) noexcept {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Coeff c = c_[i];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += field_.format(c);
            continue;
        }
        if (c != 1) {
            const std::string s = field_.format(c);
            out += s.find('+') != std::string::npos ? "(" + s + ")*" : s + "*";
        }
        out += 'x';
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

DivMod divmod(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    const FieldSpec& f = a.field();
    const int db = b.degree();
    if (a.degree() < db) return {Poly(f), a};
    std::vector<Coeff> rem = a.coeffs();
    std::vector<Coeff> quo(static_cast<std::size_t>(a.degree() - db + 1), 0);
    const Coeff lead_inv = f.inv(b.leading());
    const auto& bc = b.coeffs();
    for (int i = a.degree(); i >= db; --i) {
        const Coeff c = rem[i];
        if (c == 0) continue;
        const Coeff t = f.mul(c, lead_inv);
        quo[i - db] = t;
        const int shift = i - db;
        for (int j = 0; j <= db; ++j) rem[shift + j] = f.sub(rem[shift + j], f.mul(t, bc[j]));
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error(ErrorCode::NotADivisor, b.to_string() + " does not divide " + a.to_string());
    return q;
}

bool divides(const Poly& d, const Poly& a) {
    if (d.is_zero()) return a.is_zero();
    return (a % d).is_zero();
}

Poly gcd(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "lcm needs nonzero arguments");
    return ((a / gcd(a, b)) * b).monic();
}

Poly powmod(Poly base, std::uint64_t e, const Poly& mod) {
    Poly r = Poly::constant(mod.field(), 1) % mod;
    base = base % mod;
    while (e) {
        if (e & 1) r = (r * base) % mod;
        e >>= 1;
        if (e) base = (base * base) % mod;
    }
    return r;
}

Poly reciprocal(const Poly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "reciprocal of the zero polynomial");
    std::vector<Coeff> v(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly(f.field(), std::move(v));
}

Poly transpose(const Poly& f, unsigned m) {
    if (f.is_zero()) return f;
    if (f.degree() > static_cast<int>(m))
        throw Error(ErrorCode::DegreeExceedsM,
                    "deg " + std::to_string(f.degree()) + " exceeds m = " + std::to_string(m));
    return reciprocal(f).shifted(m - static_cast<unsigned>(f.degree()));
}

Poly conjugate(const Poly& f) {
    const FieldSpec& field = f.field();
    const std::uint64_t q = field.sub_order();
    std::vector<Coeff> v(f.coeffs());
    for (Coeff& c : v) c = field.pow(c, q);
    return Poly(field, std::move(v));
}

Poly conj_reciprocal(const Poly& f) { return conjugate(reciprocal(f)); }

Poly conj_transpose(const Poly& f, unsigned m) {
    f.field().sub_order();
    if (f.is_zero()) return f;
    if (f.degree() > static_cast<int>(m))
        throw Error(ErrorCode::DegreeExceedsM,
                    "deg " + std::to_string(f.degree()) + " exceeds m = " + std::to_string(m));
    return conj_reciprocal(f).shifted(m - static_cast<unsigned>(f.degree()));
}

bool is_associate(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    return a.monic() == b.monic();
}

bool is_self_reciprocal(const Poly& f) { return is_associate(reciprocal(f), f); }

bool is_self_conj_reciprocal(const Poly& f) { return is_associate(conj_reciprocal(f), f); }

}  // namespace qclcd
