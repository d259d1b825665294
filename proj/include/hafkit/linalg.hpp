/*
 * Copyright 2026 The hafkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <vector>

#include "hafkit/complex_matrix.hpp"

namespace hafkit {

/// Default relative tolerance for symmetry/Hermiticity/PSD decisions.
inline constexpr double kRelativeTol = 1e-9;
/// Absolute floor so that zero matrices still get a usable tolerance.
inline constexpr double kAbsoluteTolFloor = 1e-14;

/// Scale-aware default tolerance: kRelativeTol relative to the matrix norm
/// (Frobenius as an upper bound on the spectral norm), floored at
/// kAbsoluteTolFloor.
double relative_tolerance(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol);
bool is_hermitian(const ComplexMatrix& m);

bool is_symmetric(const ComplexMatrix& m, double tol);
bool is_symmetric(const ComplexMatrix& m);

/// Spectral decomposition U diag(eigenvalues) U* of a Hermitian matrix.
struct HermitianEigen {
    std::vector<double> eigenvalues; ///< ascending
    ComplexMatrix eigenvectors;      ///< unitary, eigenvectors as columns
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Throws PreconditionError for non-Hermitian input and NumericError if the
/// sweep cap is exhausted before the off-diagonal mass falls below threshold.
HermitianEigen eigh(const ComplexMatrix& m);

/// True iff the smallest eigenvalue is >= -tol * max(1, spectral norm).
bool is_psd(const ComplexMatrix& m, double tol);
bool is_psd(const ComplexMatrix& m);

/// Hermitian PSD square root. Eigenvalues within tolerance below zero are
/// clamped to zero before rooting; materially negative input is rejected.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// Inverse by Gauss-Jordan elimination with partial pivoting. Throws
/// NumericError for singular input or when the pivot-ratio condition
/// estimate overflows the cap.
ComplexMatrix inverse(const ComplexMatrix& m);

/// Determinant by LU elimination with partial pivoting.
Complex determinant(const ComplexMatrix& m);

/// Largest singular value: sqrt of the top eigenvalue of m* m.
double spectral_norm(const ComplexMatrix& m);

/// Loewner order test: l - b positive semidefinite.
bool loewner_geq(const ComplexMatrix& l, const ComplexMatrix& b, double tol);
bool loewner_geq(const ComplexMatrix& l, const ComplexMatrix& b);

} // namespace hafkit
