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

#include "qclcd/oracle.hpp"

#include "qclcd/error.hpp"

namespace qclcd {

namespace {

void require_quadratic(const FieldSpec& field) {
    if (!field.is_quadratic_extension())
        throw Error(ErrorCode::NotAQuadraticExtension, field.name() + " is not of the form GF(q^2)");
}

unsigned hull_from_gram(const Matrix& g, InnerProduct kind) {
    return static_cast<unsigned>(g.rows() - rank(gram_matrix(g, kind)));
}

}  // namespace

Matrix symplectic_form(const FieldSpec& field, unsigned m) {
    Matrix o(field, 2 * m, 2 * m);
    const Coeff minus_one = field.neg(1);
    for (unsigned i = 0; i < m; ++i) {
        o(i, m + i) = 1;
        o(m + i, i) = minus_one;
    }
    return o;
}

Matrix tau(const Matrix& block) {
    const std::size_t m = block.cols() / 2;
    Matrix t(block.field(), block.rows(), block.cols());
    for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t i = 0; i < m; ++i) {
            t(r, i) = block(r, m + i);
            t(r, m + i) = block.field().neg(block(r, i));
        }
    return t;
}

Matrix conjugated(const Matrix& m) {
    const FieldSpec& f = m.field();
    require_quadratic(f);
    return m.mapped([&f](Coeff a) { return f.conjugate(a); });
}

Matrix gram_matrix(const Matrix& g, InnerProduct kind) {
    switch (kind) {
        case InnerProduct::euclidean: return g * g.transposed();
        case InnerProduct::hermitian: return g * conjugated(g).transposed();
        case InnerProduct::symplectic:
            return g * symplectic_form(g.field(), static_cast<unsigned>(g.cols() / 2)) * g.transposed();
    }
    return {};
}

unsigned hull_dim_euclidean(const QCCode& c) {
    return hull_from_gram(qc_generator_matrix(c), InnerProduct::euclidean);
}

unsigned hull_dim_hermitian(const QCCode& c) {
    require_quadratic(c.field());
    return hull_from_gram(qc_generator_matrix(c), InnerProduct::hermitian);
}

unsigned hull_dim_symplectic(const QCCode& c) {
    const Matrix g = qc_generator_matrix(c);
    const unsigned h = hull_from_gram(g, InnerProduct::symplectic);
    // C ∩ tau(C)^perp
    const unsigned h2 = static_cast<unsigned>(intersection_dim(g, nullspace_basis(tau(g))));
    if (h != h2)
        throw Error(ErrorCode::RankMismatch, "symplectic hull: Gram route gives " + std::to_string(h) +
                                                 ", intersection route gives " + std::to_string(h2));
    return h;
}

unsigned hull_dim(const QCCode& c, InnerProduct kind) {
    switch (kind) {
        case InnerProduct::euclidean: return hull_dim_euclidean(c);
        case InnerProduct::symplectic: return hull_dim_symplectic(c);
        case InnerProduct::hermitian: return hull_dim_hermitian(c);
    }
    return 0;
}

unsigned hull_dim_intersection(const QCCode& c, InnerProduct kind) {
    return static_cast<unsigned>(intersection_dim(qc_generator_matrix(c), dual_basis(c, kind)));
}

Matrix dual_basis(const QCCode& c, InnerProduct kind) {
    const Matrix g = qc_generator_matrix(c);
    switch (kind) {
        case InnerProduct::euclidean: return nullspace_basis(g);
        case InnerProduct::hermitian: require_quadratic(c.field()); return conjugated(nullspace_basis(g));
        case InnerProduct::symplectic: {
            Matrix d = tau(nullspace_basis(g));
            const Matrix direct = nullspace_basis(g * symplectic_form(c.field(), c.m()));
            if (!same_row_space(d, direct))
                throw Error(ErrorCode::RankMismatch, "tau of the Euclidean dual differs from the symplectic dual");
            return d;
        }
    }
    return {};
}

}  // namespace qclcd
