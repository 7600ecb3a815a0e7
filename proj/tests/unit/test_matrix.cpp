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

namespace {

Matrix random_matrix(const FieldSpec& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng, int zero_bias = 0) {
    Matrix m(f, rows, cols);
    std::uniform_int_distribution<Coeff> d(0, f.order() - 1);
    std::uniform_int_distribution<int> z(0, 9);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = z(rng) < zero_bias ? 0 : d(rng);
    return m;
}

}  // namespace

TEST(Matrix, IdentityAndZero) {
    const Matrix id = Matrix::identity(gf(3), 4);
    EXPECT_EQ(rank(id), 4u);
    EXPECT_EQ(nullspace_basis(id).rows(), 0u);

    const Matrix z(gf(3), 3, 5);
    EXPECT_EQ(rank(z), 0u);
    const Matrix n = nullspace_basis(z);
    EXPECT_EQ(n.rows(), 5u);
    EXPECT_EQ(rank(n), 5u);
}

TEST(Matrix, ProductAndTranspose) {
    const FieldSpec f = gf(5);
    const Matrix a = Matrix::from_rows(f, {{1, 2, 3}, {4, 0, 1}}, 3);
    const Matrix b = Matrix::from_rows(f, {{1, 0}, {2, 1}, {0, 3}}, 2);
    const Matrix ab = a * b;
    EXPECT_EQ(ab.to_rows(), (std::vector<std::vector<Coeff>>{{0, 1}, {4, 3}}));
    EXPECT_EQ((a * b).transposed(), b.transposed() * a.transposed());
    expect_error(ErrorCode::UnsupportedSize, [&] { (void)(a * a); });
}

TEST(Matrix, RowValidation) {
    Matrix m(gf(3), 0, 3);
    const std::vector<Coeff> ok = {0, 1, 2}, longer = {0, 1, 2, 0}, bad = {0, 3, 0};
    m.append_row(ok);
    EXPECT_EQ(m.rows(), 1u);
    expect_error(ErrorCode::UnsupportedSize, [&] { m.append_row(longer); });
    expect_error(ErrorCode::OutOfRangeDigit, [&] { m.append_row(bad); });
}

TEST(Matrix, PermuteAndStack) {
    const FieldSpec f = gf(2);
    const Matrix a = Matrix::from_rows(f, {{1, 0, 0}, {0, 1, 1}}, 3);
    EXPECT_EQ(a.permuted_columns({2, 0, 1}).to_rows(), (std::vector<std::vector<Coeff>>{{0, 1, 0}, {1, 0, 1}}));
    EXPECT_EQ(a.stacked(a).rows(), 4u);
    EXPECT_EQ(rank(a.stacked(a)), 2u);
}

class MatrixProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(MatrixProperties, RrefNullspaceAndIntersection) {
    const FieldSpec f = gf(GetParam());
    std::mt19937_64 rng(GetParam());
    for (int t = 0; t < 150; ++t) {
        const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 9;
        const Matrix a = random_matrix(f, rows, cols, rng, static_cast<int>(rng() % 8));
        const Rref r = rref(a);
        ASSERT_TRUE(same_row_space(a, row_basis(a)));
        for (std::size_t i = 0; i < r.rank(); ++i) {
            ASSERT_EQ(r.reduced(i, r.pivots[i]), 1u);
            for (std::size_t j = 0; j < r.reduced.rows(); ++j)
                if (j != i) {
                    ASSERT_EQ(r.reduced(j, r.pivots[i]), 0u);
                }
            if (i > 0) {
                ASSERT_LT(r.pivots[i - 1], r.pivots[i]);
            }
        }
        const Matrix n = nullspace_basis(a);
        ASSERT_EQ(rank(a) + n.rows(), cols);
        ASSERT_EQ(rank(n), n.rows());
        if (n.rows() > 0) {
            ASSERT_EQ(rank(a * n.transposed()), 0u);
        }

        const Matrix b = random_matrix(f, 1 + rng() % 6, cols, rng, 5);
        ASSERT_EQ(intersection_dim(a, b) + rank(a.stacked(b)), rank(a) + rank(b));
        for (std::size_t i = 0; i < b.rows(); ++i)
            ASSERT_EQ(in_row_space(a, b.row(i)), rank(a.stacked(Matrix::from_rows(f, {b.to_rows()[i]}, cols))) == rank(a));
    }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, MatrixProperties, ::testing::Values(2, 3, 4, 5, 9));

TEST(Matrix, SameRowSpaceDetectsDifference) {
    const FieldSpec f = gf(2);
    const Matrix a = Matrix::from_rows(f, {{1, 1, 0}, {0, 1, 1}}, 3);
    const Matrix b = Matrix::from_rows(f, {{1, 0, 1}, {1, 1, 0}}, 3);
    const Matrix c = Matrix::from_rows(f, {{1, 0, 0}, {0, 1, 1}}, 3);
    EXPECT_TRUE(same_row_space(a, b));
    EXPECT_FALSE(same_row_space(a, c));
}
