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

#include "qclcd/matrix.hpp"

#include <utility>

#include "qclcd/error.hpp"

namespace qclcd {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, const std::vector<std::vector<Coeff>>& rows, std::size_t cols) {
    Matrix m(field, 0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

std::vector<std::vector<Coeff>> Matrix::to_rows() const {
    std::vector<std::vector<Coeff>> r;
    r.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) r.emplace_back(row(i).begin(), row(i).end());
    return r;
}

void Matrix::append_row(std::span<const Coeff> row) {
    if (row.size() != cols_)
        throw Error(ErrorCode::UnsupportedSize,
                    "row of length " + std::to_string(row.size()) + " in a matrix with " + std::to_string(cols_) +
                        " columns");
    for (Coeff v : row) {
        if (!field_.contains(v))
            throw Error(ErrorCode::OutOfRangeDigit, std::to_string(v) + " is not an element of " + field_.name());
    }
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

Matrix Matrix::transposed() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::mapped(const std::function<Coeff(Coeff)>& f) const {
    Matrix t = *this;
    for (auto& v : t.a_) v = f(v);
    return t;
}

Matrix Matrix::permuted_columns(const std::vector<std::size_t>& perm) const {
    if (perm.size() != cols_) throw Error(ErrorCode::UnsupportedSize, "permutation length does not match columns");
    Matrix t(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(i, j) = (*this)(i, perm[j]);
    return t;
}

Matrix Matrix::stacked(const Matrix& other) const {
    require_same_field(field_, other.field_);
    if (other.cols_ != cols_) throw Error(ErrorCode::UnsupportedSize, "stacking matrices of different widths");
    Matrix t = *this;
    t.a_.insert(t.a_.end(), other.a_.begin(), other.a_.end());
    t.rows_ += other.rows_;
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_);
    if (a.cols_ != b.rows_)
        throw Error(ErrorCode::UnsupportedSize, "product of " + std::to_string(a.rows_) + "x" +
                                                    std::to_string(a.cols_) + " and " + std::to_string(b.rows_) +
                                                    "x" + std::to_string(b.cols_));
    const auto& f = a.field_.data();
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t l = 0; l < a.cols_; ++l) {
            const Coeff s = a(i, l);
            if (s == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = f.add(c(i, j), f.mul(s, b(l, j)));
        }
    return c;
}

Rref rref(const Matrix& m) {
    Rref r{m, {}};
    Matrix& a = r.reduced;
    const FieldSpec& field = a.field();
    const auto& f = field.data();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < a.rows() && a(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(lead, j));
        const Coeff inv = field.inv(a(lead, col));
        for (std::size_t j = col; j < a.cols(); ++j) a(lead, j) = f.mul(a(lead, j), inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == lead || a(i, col) == 0) continue;
            const Coeff s = f.neg(a(i, col));
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) = f.add(a(i, j), f.mul(s, a(lead, j)));
        }
        r.pivots.push_back(col);
        ++lead;
    }
    return r;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix row_basis(const Matrix& m) {
    Rref r = rref(m);
    Matrix b(m.field(), 0, m.cols());
    for (std::size_t i = 0; i < r.rank(); ++i) b.append_row(r.reduced.row(i));
    return b;
}

Matrix nullspace_basis(const Matrix& m) {
    const Rref r = rref(m);
    const auto& f = m.field().data();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivots) is_pivot[c] = true;
    Matrix n(m.field(), 0, m.cols());
    std::vector<Coeff> v(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < r.rank(); ++i) v[r.pivots[i]] = f.neg(r.reduced(i, free));
        n.append_row(v);
    }
    return n;
}

std::size_t intersection_dim(const Matrix& a, const Matrix& b) {
    return rank(a) + rank(b) - rank(a.stacked(b));
}

bool same_row_space(const Matrix& a, const Matrix& b) {
    const std::size_t ra = rank(a);
    return ra == rank(b) && ra == rank(a.stacked(b));
}

bool in_row_space(const Matrix& m, std::span<const Coeff> v) {
    Matrix row(m.field(), 0, m.cols());
    row.append_row(v);
    return rank(m) == rank(m.stacked(row));
}

}  // namespace qclcd
