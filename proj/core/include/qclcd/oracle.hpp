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

#ifndef QCLCD_ORACLE_HPP
#define QCLCD_ORACLE_HPP

#include "qclcd/lcd_check.hpp"
#include "qclcd/matrix.hpp"

namespace qclcd {

// [[0, I_m], [-I_m, 0]]
Matrix symplectic_form(const FieldSpec& field, unsigned m);
// (x1 | x2) -> (x2 | -x1) applied to every row.
Matrix tau(const Matrix& block);
// Entrywise a -> a^q over GF(q^2).
Matrix conjugated(const Matrix& m);

// Gram matrix G B sigma(G)^T of the generator rows under the given form.
Matrix gram_matrix(const Matrix& g, InnerProduct kind);

// k - rank(Gram).
unsigned hull_dim_euclidean(const QCCode& c);
unsigned hull_dim_hermitian(const QCCode& c);
// Also evaluates dim(C ∩ tau(C)^perp) and throws RankMismatch if the two disagree.
unsigned hull_dim_symplectic(const QCCode& c);
unsigned hull_dim(const QCCode& c, InnerProduct kind);

// dim(C ∩ dual) from stacked bases; independent of the Gram-matrix route.
unsigned hull_dim_intersection(const QCCode& c, InnerProduct kind);

// Basis of the dual code under the given form, 2m - k rows.
Matrix dual_basis(const QCCode& c, InnerProduct kind);

}  // namespace qclcd

#endif  // QCLCD_ORACLE_HPP
