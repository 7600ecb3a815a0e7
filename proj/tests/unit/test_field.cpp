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


#include <gtest/gtest.h>

#include "brute.hpp"

using namespace qclcd;
using qclcd::ref::gf;
using qclcd::ref::expect_error;

TEST(Field, PrimeFieldConstruction) {
    const FieldSpec f = FieldSpec::make(2, 1);
    EXPECT_EQ(f.order(), 2u);
    EXPECT_EQ(f.degree(), 1u);
    EXPECT_TRUE(f.modulus().empty());
}

TEST(Field, QuaternaryWithExplicitModulus) {
    const FieldSpec f = FieldSpec::make(2, 2, {1, 1, 1});
    const Coeff w = f.parse("w");
    EXPECT_EQ(f.mul(w, w), f.add(w, 1));
}

TEST(Field, DefaultQuaternaryModulusIsXSquaredPlusXPlusOne) {
    EXPECT_EQ(FieldSpec::make(2, 2).modulus(), (std::vector<Coeff>{1, 1, 1}));
}

TEST(Field, ReducibleModulusRejected) {
    expect_error(ErrorCode::ReducibleModulus, [] { FieldSpec::make(2, 2, {1, 0, 1}); });
}

TEST(Field, NonPrimeCharacteristicRejected) {
    expect_error(ErrorCode::NonPrimeCharacteristic, [] { FieldSpec::make(6, 1); });
    expect_error(ErrorCode::NonPrimeCharacteristic, [] { FieldSpec::make(1, 1); });
}

TEST(Field, Examples) {
    const FieldSpec f3 = gf(3);
    EXPECT_EQ(f3.add(2, 2), 1u);

    const FieldSpec f4 = gf(4);
    const Coeff w = f4.parse("w");
    const Coeff w1 = f4.parse("w+1");
    EXPECT_EQ(f4.mul(w, w), w1);
    EXPECT_EQ(f4.div(1, w), w1);
    EXPECT_EQ(f4.frobenius(w, 2), w1);
    EXPECT_EQ(f4.frobenius(1, 2), 1u);
    EXPECT_EQ(f3.frobenius(2, 3), 2u);
}

TEST(Field, ElementWrapperOperators) {
    const FieldSpec f4 = gf(4);
    const auto w = FieldElement::parse(f4, "w");
    EXPECT_EQ((w * w).to_string(), "w+1");
    EXPECT_EQ((w / w).value(), 1u);
    EXPECT_EQ((w - w).value(), 0u);
    EXPECT_EQ(w.inverse().to_string(), "w+1");
    EXPECT_EQ(w.frobenius(2).to_string(), "w+1");
}

TEST(Field, DivisionByZero) {
    expect_error(ErrorCode::DivisionByZero, [] { gf(5).inv(0); });
    expect_error(ErrorCode::DivisionByZero, [] { gf(4).div(1, 0); });
}

TEST(Field, FrobeniusRejectsNonCharacteristicPower) {
    expect_error(ErrorCode::InvalidPower, [] { gf(4).frobenius(2, 3); });
    expect_error(ErrorCode::InvalidPower, [] { gf(9).frobenius(2, 2); });
}

TEST(Field, MixingFieldsRejected) {
    const auto a = FieldElement(gf(2), 1);
    const auto b = FieldElement(gf(3), 1);
    expect_error(ErrorCode::FieldMismatch, [&] { (void)(a + b); });
}

class FieldAxioms : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(FieldAxioms, HoldExhaustively) {
    const FieldSpec f = gf(GetParam());
    const Coeff q = f.order();
    for (Coeff a = 0; a < q; ++a) {
        EXPECT_EQ(f.add(a, 0), a);
        EXPECT_EQ(f.mul(a, 1), a);
        EXPECT_EQ(f.add(a, f.neg(a)), 0u);
        if (a != 0) {
            EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
        }
        // a^q = a
        EXPECT_EQ(f.pow(a, q), a);
        for (Coeff b = 0; b < q; ++b) {
            EXPECT_EQ(f.add(a, b), f.add(b, a));
            EXPECT_EQ(f.mul(a, b), f.mul(b, a));
            EXPECT_EQ(f.sub(f.add(a, b), b), a);
            for (Coeff c = 0; c < q; ++c) {
                ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            }
        }
    }
}

TEST_P(FieldAxioms, FrobeniusIsAnAutomorphism) {
    const FieldSpec f = gf(GetParam());
    const Coeff p = f.characteristic();
    for (Coeff a = 0; a < f.order(); ++a)
        for (Coeff b = 0; b < f.order(); ++b) {
            EXPECT_EQ(f.frobenius(f.add(a, b), p), f.add(f.frobenius(a, p), f.frobenius(b, p)));
            EXPECT_EQ(f.frobenius(f.mul(a, b), p), f.mul(f.frobenius(a, p), f.frobenius(b, p)));
        }
}

TEST_P(FieldAxioms, FormatParseRoundTrip) {
    const FieldSpec f = gf(GetParam());
    for (Coeff a = 0; a < f.order(); ++a) {
        EXPECT_EQ(f.parse(f.format(a)), a) << f.format(a);
    }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms, ::testing::Values(2, 3, 4, 5, 7, 8, 9, 16));

TEST(Field, ConjugationIsAnInvolutionOnQuadraticExtensions) {
    for (std::uint64_t q : {4, 9, 16}) {
        const FieldSpec f = gf(q);
        for (Coeff a = 0; a < f.order(); ++a) {
            EXPECT_EQ(f.conjugate(f.conjugate(a)), a);
        }
    }
}

TEST(Field, ConjugationFixesExactlyTheSubfield) {
    const FieldSpec f = gf(9);
    unsigned fixed = 0;
    for (Coeff a = 0; a < f.order(); ++a) fixed += f.conjugate(a) == a;
    EXPECT_EQ(fixed, 3u);
}

TEST(Field, ConjugationNeedsEvenDegree) {
    expect_error(ErrorCode::NotAQuadraticExtension, [] { gf(8).conjugate(1); });
    expect_error(ErrorCode::NotAQuadraticExtension, [] { gf(3).conjugate(1); });
}

TEST(Field, MultiplicativeGroupIsCyclic) {
    for (std::uint64_t q : {4, 8, 9, 16}) {
        const FieldSpec f = gf(q);
        bool found = false;
        for (Coeff g = 2; g < q && !found; ++g) {
            std::vector<bool> seen(q, false);
            Coeff x = 1;
            for (std::uint64_t i = 0; i + 1 < q; ++i, x = f.mul(x, g)) seen[x] = true;
            found = std::count(seen.begin(), seen.end(), true) == static_cast<long>(q - 1);
        }
        EXPECT_TRUE(found) << q;
    }
}

TEST(Field, LargeExtensionWithoutTables) {
    const FieldSpec f = FieldSpec::make(3, 11);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Coeff> d(1, f.order() - 1);
    for (int i = 0; i < 200; ++i) {
        const Coeff a = d(rng), b = d(rng);
        EXPECT_EQ(f.mul(f.div(a, b), b), a);
        EXPECT_EQ(f.pow(a, f.order()), a);
    }
}
