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

#ifndef QCLCD_MATRIX_HPP
#define QCLCD_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qclcd/field.hpp"

namespace qclcd {

// Dense row-major matrix over a FieldSpec.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

    static Matrix identity(const FieldSpec& field, std::size_t n);
    static Matrix from_rows(const FieldSpec& field, const std::vector<std::vector<Coeff>>& rows, std::size_t cols);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    Coeff& operator()(std::size_t r, std::size_t c) noexcept { return a_[r * cols_ + c]; }
    Coeff operator()(std::size_t r, std::size_t c) const noexcept { return a_[r * cols_ + c]; }
    std::span<Coeff> row(std::size_t r) noexcept { return {a_.data() + r * cols_, cols_}; }
    std::span<const Coeff> row(std::size_t r) const noexcept { return {a_.data() + r * cols_, cols_}; }
    std::vector<std::vector<Coeff>> to_rows() const;

    void append_row(std::span<const Coeff> row);
    Matrix transposed() const;
    // Entrywise map, e.g. the Frobenius conjugation.
    Matrix mapped(const std::function<Coeff(Coeff)>& f) const;
    // Column j of the result is column perm[j] of this matrix.
    Matrix permuted_columns(const std::vector<std::size_t>& perm) const;
    // Rows of this matrix followed by rows of other.
    Matrix stacked(const Matrix& other) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_ && a.field_ == b.field_;
    }

private:
    FieldSpec field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Coeff> a_;
};

struct Rref {
    Matrix reduced;                   // rank nonzero rows first, pivots equal to 1
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank() const noexcept { return pivots.size(); }
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Basis of the row space (the nonzero rows of the reduced form).
Matrix row_basis(const Matrix& m);
// Rows form a basis of {v : m v^T = 0}.
Matrix nullspace_basis(const Matrix& m);
// dim(rowspace(a) ∩ rowspace(b)) = rank a + rank b - rank [a; b]
std::size_t intersection_dim(const Matrix& a, const Matrix& b);
bool same_row_space(const Matrix& a, const Matrix& b);
bool in_row_space(const Matrix& m, std::span<const Coeff> v);

}  // namespace qclcd

#endif  // QCLCD_MATRIX_HPP
