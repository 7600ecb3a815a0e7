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

#include "qclcd/factor.hpp"

#include <algorithm>

#include "qclcd/error.hpp"
#include "random.hpp"

namespace qclcd {

namespace {

Poly x_poly(const FieldSpec& f) { return Poly::monomial(f, 1, 1); }

Poly random_below(const FieldSpec& field, int n, std::mt19937_64& rng) {
    std::vector<Coeff> c(static_cast<std::size_t>(n));
    for (auto& v : c) v = detail::uniform_below(rng, field.order());
    return Poly(field, std::move(c));
}

// Candidate splitting polynomial for a product of distinct degree-d irreducibles.
Poly splitter(const Poly& a, const Poly& f, int d) {
    const FieldSpec& field = f.field();
    const std::uint64_t q = field.order();
    if (field.characteristic() == 2) {
        // absolute trace GF(q^d) -> GF(2)
        const unsigned steps = field.degree() * static_cast<unsigned>(d);
        Poly t = a % f;
        Poly s = t;
        for (unsigned i = 1; i < steps; ++i) {
            t = (t * t) % f;
            s += t;
        }
        return s;
    }
    // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
    Poly t = a % f;
    Poly s = t;
    for (int i = 1; i < d; ++i) {
        t = powmod(t, q, f);
        s = (s * t) % f;
    }
    return powmod(s, (q - 1) / 2, f) - Poly::constant(field, 1);
}

void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    for (;;) {
        Poly a = random_below(f.field(), f.degree(), rng);
        if (a.is_constant()) continue;
        Poly g = gcd(splitter(a, f, d), f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(exact_div(f, g), d, rng, out);
            return;
        }
    }
}

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> r;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            r.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) r.push_back(n);
    return r;
}

}  // namespace

std::string_view to_string(PairingMode mode) noexcept {
    return mode == PairingMode::plain ? "plain" : "conjugate";
}

Poly Factorization::product() const {
    Poly r = Poly::constant(field, unit);
    for (const auto& f : factors)
        for (unsigned e = 0; e < f.multiplicity; ++e) r *= f.poly;
    return r;
}

std::string_view Factorization::tag(std::size_t i) const noexcept {
    const bool self = factors[i].self_paired;
    if (mode == PairingMode::plain) return self ? "self-reciprocal" : "reciprocal-pair";
    return self ? "self-conjugate-reciprocal" : "conjugate-pair";
}

std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
    const FieldSpec& field = f.field();
    std::vector<Poly> out;
    if (f.degree() < 1) return out;

    std::mt19937_64 rng(seed);
    Poly g = f.monic();
    const Poly x = x_poly(field);
    Poly h = x % g;
    int i = 0;
    while (g.degree() >= 2 * (i + 1)) {
        ++i;
        h = powmod(h, field.order(), g);
        Poly d = gcd(h - x, g);
        if (!d.is_one()) {
            equal_degree(d, i, rng, out);
            g = exact_div(g, d);
            h = h % g;
        }
    }
    if (g.degree() > 0) out.push_back(g);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const Poly g = f.monic();
    const unsigned n = static_cast<unsigned>(g.degree());
    const std::uint64_t q = g.field().order();
    const Poly x = x_poly(g.field());

    // frob[i] = x^(q^i) mod g
    std::vector<Poly> frob{x % g};
    for (unsigned i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), q, g));
    if (!(frob[n] - x).is_zero()) return false;
    for (unsigned r : prime_divisors(n)) {
        if (!gcd(frob[n / r] - x, g).is_one()) return false;
    }
    return true;
}

Factorization factor_xm_minus_1(const FieldSpec& field, unsigned m, PairingMode mode, std::uint64_t seed) {
    if (m == 0) throw Error(ErrorCode::NotCoprime, "m must be positive");
    if (m % field.characteristic() == 0)
        throw Error(ErrorCode::NotCoprime,
                    "gcd(" + std::to_string(field.order()) + ", " + std::to_string(m) + ") != 1");
    if (mode == PairingMode::conjugate && !field.is_quadratic_extension())
        throw Error(ErrorCode::UnsupportedField, "conjugate pairing needs a field of order q^2, got " + field.name());

    Factorization r;
    r.field = field;
    r.mode = mode;
    r.unit = 1;
    const auto polys = factor_squarefree(Poly::x_pow_minus_one(field, m), seed);
    r.factors.reserve(polys.size());
    for (const auto& p : polys) r.factors.push_back({p, 1, true, 0});

    for (std::size_t i = 0; i < r.factors.size(); ++i) {
        const Poly& f = r.factors[i].poly;
        const Poly mate = (mode == PairingMode::plain ? reciprocal(f) : conj_reciprocal(f)).monic();
        auto it = std::find_if(r.factors.begin(), r.factors.end(), [&](const Factor& g) { return g.poly == mate; });
        // the root set of x^m - 1 is closed under both pairings
        r.factors[i].partner = static_cast<std::size_t>(it - r.factors.begin());
        r.factors[i].self_paired = r.factors[i].partner == i;
    }
    return r;
}

DivisorRange::DivisorRange(const Factorization& f) : f_(&f) {
    if (f.factors.size() >= 63)
        throw Error(ErrorCode::UnsupportedSize, std::to_string(f.factors.size()) + " factors is too many to enumerate");
    count_ = std::uint64_t{1} << f.factors.size();
}

Poly DivisorRange::iterator::operator*() const {
    Poly r = Poly::constant(f_->field, 1);
    for (std::size_t i = 0; i < f_->factors.size(); ++i)
        if ((mask_ >> i) & 1U) r *= f_->factors[i].poly;
    return r;
}

DivisorRange divisors_of(const Factorization& f) { return DivisorRange(f); }

std::vector<Poly> all_divisors(const Factorization& f) {
    std::vector<Poly> r;
    for (Poly d : divisors_of(f)) r.push_back(std::move(d));
    return r;
}

}  // namespace qclcd
