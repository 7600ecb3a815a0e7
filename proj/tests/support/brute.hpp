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


#ifndef QCLCD_TESTS_BRUTE_HPP
#define QCLCD_TESTS_BRUTE_HPP

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gtest/gtest.h>

#include "qclcd/qclcd.hpp"

// Brute-force reference implementations. Nothing here shares an algorithm with the
// library beyond field arithmetic and polynomial division.
namespace qclcd::ref {

FieldSpec gf(std::uint64_t q);
Poly P(const FieldSpec& f, std::string_view text);

// Every codeword of the row space of g, as q^rows combinations (rows assumed independent).
std::vector<std::vector<Coeff>> span_of(const Matrix& g);

Coeff form(const FieldSpec& f, std::span<const Coeff> a, std::span<const Coeff> b, InnerProduct kind);
unsigned weight(std::span<const Coeff> v, WeightKind kind);

unsigned brute_min_distance(const Matrix& g, WeightKind kind);
// log_q of the number of codewords orthogonal to every row of g.
unsigned brute_hull_dim(const Matrix& g, InnerProduct kind);

std::vector<Poly> monic_polys(const FieldSpec& f, unsigned degree);
// All polynomials of degree < bound, zero included.
std::vector<Poly> polys_below(const FieldSpec& f, unsigned bound);
bool brute_irreducible(const Poly& f);
// Monic divisors of x^m - 1 found by trial division over all monic polynomials.
std::vector<Poly> brute_divisors(const FieldSpec& f, unsigned m);
// Number of triples (g11, g12, g22) with g11, g22 | x^m - 1, deg g12 < deg g22 and
// gcd(g11, g22) | g12.
std::uint64_t brute_candidate_count(const FieldSpec& f, unsigned m);

// Code of the fixture row with the given label.
QCCode fixture_code(const std::string& path, std::string_view label);

Poly random_poly(const FieldSpec& f, int max_degree, std::mt19937_64& rng);
Poly random_nonzero_poly(const FieldSpec& f, int max_degree, std::mt19937_64& rng);

template <class Fn>
void expect_error(ErrorCode code, Fn&& fn) {
    try {
        fn();
        ADD_FAILURE() << "expected " << to_string(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

}  // namespace qclcd::ref

#endif  // QCLCD_TESTS_BRUTE_HPP
