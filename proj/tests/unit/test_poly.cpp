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
using qclcd::ref::expect_error;
using qclcd::ref::gf;
using qclcd::ref::P;

TEST(Poly, ZeroHasSentinelDegree) {
    const Poly z(gf(3));
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), Poly::kZeroDegree);
    EXPECT_LT(z.degree(), Poly::constant(gf(3), 1).degree());
}

TEST(Poly, TrailingZerosTrimmed) {
    const Poly f(gf(2), {1, 1, 0, 0});
    EXPECT_EQ(f.degree(), 1);
    EXPECT_EQ(f, P(gf(2), "x+1"));
}

TEST(Poly, ArithmeticExamples) {
    const FieldSpec f2 = gf(2), f3 = gf(3), f4 = gf(4);
    EXPECT_EQ(P(f2, "x+1") * P(f2, "x+1"), P(f2, "x^2+1"));

    const auto [q, r] = divmod(P(f3, "x^3-1"), P(f3, "x-1"));
    EXPECT_EQ(q, P(f3, "x^2+x+1"));
    EXPECT_TRUE(r.is_zero());

    EXPECT_EQ(P(f4, "x+w") * P(f4, "x+w^2"), P(f4, "x^2+x+1"));
}

TEST(Poly, GcdExamples) {
    const FieldSpec f2 = gf(2), f3 = gf(3);
    EXPECT_EQ(gcd(P(f3, "x^2-1"), P(f3, "x-1")), P(f3, "x+2"));
    EXPECT_EQ(gcd(P(f2, "x^2+x+1"), P(f2, "(x+1)(x^4+x+1)(x^4+x^3+1)(x^4+x^3+x^2+x+1)")), P(f2, "1"));
    EXPECT_EQ(gcd(P(f3, "2x+2"), Poly(f3)), P(f3, "x+1"));
}

TEST(Poly, GcdAndLcmErrors) {
    const FieldSpec f = gf(5);
    expect_error(ErrorCode::BothZero, [&] { gcd(Poly(f), Poly(f)); });
    expect_error(ErrorCode::ZeroPolynomial, [&] { lcm(Poly(f), P(f, "x")); });
    expect_error(ErrorCode::DivisionByZero, [&] { divmod(P(f, "x"), Poly(f)); });
    expect_error(ErrorCode::NotADivisor, [&] { exact_div(P(f, "x^2+1"), P(f, "x")); });
    expect_error(ErrorCode::FieldMismatch, [&] { (void)(P(f, "x") + P(gf(7), "x")); });
}

TEST(Poly, ReciprocalExamples) {
    const FieldSpec f2 = gf(2), f3 = gf(3);
    EXPECT_EQ(reciprocal(P(f2, "x+1")), P(f2, "x+1"));
    EXPECT_EQ(reciprocal(P(f2, "x^2+x")), P(f2, "x+1"));
    EXPECT_EQ(reciprocal(P(f3, "2x^5+2x^4+x^3+2")), P(f3, "2x^5+x^2+2x+2"));
    expect_error(ErrorCode::ZeroPolynomial, [&] { reciprocal(Poly(f2)); });
}

TEST(Poly, TransposeExamples) {
    const FieldSpec f2 = gf(2);
    EXPECT_EQ(transpose(P(f2, "x^2+x"), 3), P(f2, "x^2+x"));
    EXPECT_EQ(transpose(P(f2, "1"), 5), P(f2, "x^5"));
    EXPECT_EQ(transpose(P(f2, "x+1"), 1), P(f2, "x+1"));
    expect_error(ErrorCode::DegreeExceedsM, [&] { transpose(P(f2, "x^4"), 3); });
}

TEST(Poly, ConjugateExamples) {
    const FieldSpec f4 = gf(4);
    EXPECT_EQ(conjugate(P(f4, "w*x+1")), P(f4, "w^2*x+1"));
    EXPECT_EQ(conj_reciprocal(P(f4, "w*x+1")), P(f4, "x+w^2"));
    const Poly f = P(f4, "x^3+w*x+w^2");
    EXPECT_EQ(conj_reciprocal(conj_reciprocal(f)), f);
    expect_error(ErrorCode::NotAQuadraticExtension, [] { conjugate(P(gf(2), "x")); });
}

TEST(Poly, SelfReciprocalExamples) {
    const FieldSpec f2 = gf(2);
    EXPECT_TRUE(is_self_reciprocal(P(f2, "x^2+x+1")));
    EXPECT_FALSE(is_self_reciprocal(P(f2, "x^3+x+1")));
    EXPECT_TRUE(is_self_reciprocal(P(f2, "1")));
    // x - 1 over GF(3): reciprocal is 1 - x = -(x - 1).
    EXPECT_TRUE(is_self_reciprocal(P(gf(3), "x-1")));
    EXPECT_FALSE(is_self_reciprocal(P(gf(3), "x^2+x+2")));
}

TEST(Poly, SelfConjugateReciprocal) {
    const FieldSpec f4 = gf(4);
    EXPECT_TRUE(is_self_conj_reciprocal(P(f4, "x+1")));
    // (x+w)^dagger = w^2*x+1 = w^2 (x+w).
    EXPECT_TRUE(is_self_conj_reciprocal(P(f4, "x+w")));
    // (x^2+x+w)^dagger is associate to x^2+w*x+w.
    EXPECT_FALSE(is_self_conj_reciprocal(P(f4, "x^2+x+w")));
    EXPECT_TRUE(is_self_conj_reciprocal(P(f4, "(x^2+x+w)(x^2+w*x+w)")));
}

TEST(Poly, ToStringUsesDescendingPowers) {
    EXPECT_EQ(P(gf(4), "1+x^4+x^2+w*x+w*x^3").to_string(), "x^4+w*x^3+x^2+w*x+1");
    EXPECT_EQ(Poly(gf(3)).to_string(), "0");
    EXPECT_EQ(P(gf(3), "2x^2+1").to_string(), "2*x^2+1");
}

TEST(Poly, CanonicalOrder) {
    const FieldSpec f2 = gf(2);
    EXPECT_LT(P(f2, "x+1"), P(f2, "x^2"));
    EXPECT_LT(P(f2, "x^3+x+1"), P(f2, "x^3+x^2+1"));
    EXPECT_FALSE(P(f2, "x") < P(f2, "x"));
}

TEST(Poly, PowmodMatchesRepeatedMultiplication) {
    const FieldSpec f = gf(3);
    const Poly mod = P(f, "x^5+2x+1");
    const Poly base = P(f, "x^3+x+2");
    Poly acc = P(f, "1");
    for (unsigned e = 0; e < 30; ++e) {
        EXPECT_EQ(powmod(base, e, mod), acc % mod) << e;
        acc = (acc * base) % mod;
    }
}

TEST(Poly, EvaluateAndDerivative) {
    const FieldSpec f = gf(5);
    const Poly g = P(f, "x^3+2x+4");
    EXPECT_EQ(g.evaluate(2), (8 + 4 + 4) % 5u);
    EXPECT_EQ(g.derivative(), P(f, "3x^2+2"));
    // x^5 has zero derivative in characteristic 5.
    EXPECT_TRUE(P(f, "x^5").derivative().is_zero());
}

class PolyProperties : public ::testing::TestWithParam<std::uint64_t> {
protected:
    FieldSpec f = gf(GetParam());
    std::mt19937_64 rng{GetParam() * 977 + 1};
    static constexpr int kCases = 500;
};

TEST_P(PolyProperties, DivisionIdentity) {
    for (int i = 0; i < kCases; ++i) {
        const Poly a = ref::random_poly(f, 12, rng);
        const Poly b = ref::random_nonzero_poly(f, 6, rng);
        const auto [q, r] = divmod(a, b);
        ASSERT_EQ(q * b + r, a);
        ASSERT_LT(r.degree(), b.degree());
    }
}

TEST_P(PolyProperties, GcdLcmIdentities) {
    for (int i = 0; i < kCases; ++i) {
        const Poly a = ref::random_nonzero_poly(f, 8, rng);
        const Poly b = ref::random_nonzero_poly(f, 8, rng);
        const Poly c = ref::random_nonzero_poly(f, 3, rng);
        const Poly g = gcd(a, b);
        ASSERT_EQ(g.leading(), 1u);
        ASSERT_TRUE(divides(g, a) && divides(g, b));
        ASSERT_EQ(g * lcm(a, b), (a * b).monic());
        ASSERT_EQ(gcd(a * c, b * c), (g * c).monic());
        ASSERT_EQ(gcd(a, b), gcd(b, a));
        ASSERT_EQ(gcd(a, b), gcd(a + c * b, b));
    }
}

TEST_P(PolyProperties, ReciprocalLaws) {
    for (int i = 0; i < kCases; ++i) {
        const Poly a = ref::random_nonzero_poly(f, 9, rng);
        const Poly b = ref::random_nonzero_poly(f, 9, rng);
        ASSERT_EQ(reciprocal(a * b), reciprocal(a) * reciprocal(b));
        if (a.coeff(0) != 0) {
            ASSERT_EQ(reciprocal(reciprocal(a)), a);
        }
        const unsigned m = 12;
        ASSERT_EQ(transpose(a, m), reciprocal(a).shifted(m - static_cast<unsigned>(a.degree())));
        ASSERT_EQ(is_self_reciprocal(a), is_associate(a, reciprocal(a)));
    }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, PolyProperties, ::testing::Values(2, 3, 4, 5, 9));

TEST(Poly, ConjugateReciprocalLaws) {
    std::mt19937_64 rng(11);
    for (std::uint64_t q : {4, 9}) {
        const FieldSpec f = gf(q);
        for (int i = 0; i < 500; ++i) {
            const Poly a = ref::random_nonzero_poly(f, 9, rng);
            const Poly b = ref::random_nonzero_poly(f, 9, rng);
            ASSERT_EQ(conjugate(conjugate(a)), a);
            ASSERT_EQ(conjugate(a * b), conjugate(a) * conjugate(b));
            ASSERT_EQ(conj_reciprocal(a * b), conj_reciprocal(a) * conj_reciprocal(b));
            ASSERT_EQ(conj_reciprocal(a), conjugate(reciprocal(a)));
            if (a.coeff(0) != 0) {
                ASSERT_EQ(conj_reciprocal(conj_reciprocal(a)), a);
            }
            ASSERT_EQ(conj_transpose(a, 10), conjugate(transpose(a, 10)));
        }
    }
}
