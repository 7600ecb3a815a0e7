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

#ifndef QCLCD_QC_CODE_HPP
#define QCLCD_QC_CODE_HPP

#include <string_view>
#include <vector>

#include "qclcd/factor.hpp"
#include "qclcd/matrix.hpp"
#include "qclcd/poly.hpp"

namespace qclcd {

enum class Origin { two_generator, one_generator };

std::string_view to_string(Origin o) noexcept;

// Index-2 quasi-cyclic code of length 2m generated by (g11, g12) and (0, g22).
// Instances only come out of qc_new / qc_from_one_generator and are always valid.
class QCCode {
public:
    const FieldSpec& field() const noexcept { return g11_.field(); }
    unsigned m() const noexcept { return m_; }
    unsigned length() const noexcept { return 2 * m_; }
    const Poly& g11() const noexcept { return g11_; }
    const Poly& g12() const noexcept { return g12_; }
    const Poly& g22() const noexcept { return g22_; }
    Origin origin() const noexcept { return origin_; }
    // g12 as passed to qc_from_one_generator or qc_new_reduced; otherwise equal to g12().
    const Poly& original_g12() const noexcept { return original_g12_; }

    friend bool operator==(const QCCode& a, const QCCode& b) noexcept {
        return a.m_ == b.m_ && a.g11_ == b.g11_ && a.g12_ == b.g12_ && a.g22_ == b.g22_;
    }

private:
    QCCode(unsigned m, Poly g11, Poly g12, Poly g22, Origin origin, Poly original_g12)
        : m_(m), g11_(std::move(g11)), g12_(std::move(g12)), g22_(std::move(g22)), origin_(origin),
          original_g12_(std::move(original_g12)) {}

    friend QCCode qc_new(const FieldSpec&, unsigned, const Poly&, const Poly&, const Poly&);
    friend QCCode qc_from_one_generator(const FieldSpec&, unsigned, const Poly&, const Poly&);
    friend QCCode qc_new_reduced(const FieldSpec&, unsigned, const Poly&, const Poly&, const Poly&);

    unsigned m_;
    Poly g11_, g12_, g22_;
    Origin origin_;
    Poly original_g12_;
};

// Validates g11 | x^m-1, g22 | x^m-1, deg g12 < deg g22 and gcd(g11, g22) | g12.
// g11 and g22 are stored monic; g12 is stored as given.
QCCode qc_new(const FieldSpec& field, unsigned m, const Poly& g11, const Poly& g12, const Poly& g22);

// As qc_new, but first replaces g12 by g12 mod g22. Subtracting a multiple of (0, g22)
// from (g11, g12) leaves the code unchanged; the given g12 is kept as original_g12().
QCCode qc_new_reduced(const FieldSpec& field, unsigned m, const Poly& g11, const Poly& g12, const Poly& g22);

// Code generated by the single pair (g11, g12), rewritten in two-generator form with
// g22 = (x^m-1) / (g11 / gcd(g11, g12)).
QCCode qc_from_one_generator(const FieldSpec& field, unsigned m, const Poly& g11, const Poly& g12);

unsigned qc_dimension(const QCCode& c) noexcept;

struct Decomposition {
    PairingMode mode = PairingMode::plain;
    Poly g, l, g11p, g22p, r11, t11, r22, t22;
};

Decomposition qc_decompose(const QCCode& c, PairingMode mode);

// k x 2m generator matrix in block layout (first-coordinate block, then second).
Matrix qc_generator_matrix(const QCCode& c);

// Column permutation from block layout to interleaved layout (c0_0, c1_0, c0_1, c1_1, ...):
// column j of the interleaved matrix is column perm[j] of the block matrix.
std::vector<std::size_t> interleave_permutation(unsigned m);
Matrix to_interleaved(const Matrix& block);

// Coefficients of x^shift * f mod x^m - 1, length m.
std::vector<Coeff> cyclic_coeffs(const Poly& f, unsigned m, unsigned shift = 0);

}  // namespace qclcd

#endif  // QCLCD_QC_CODE_HPP
