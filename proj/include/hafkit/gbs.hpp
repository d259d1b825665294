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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hafkit/complex_matrix.hpp"

namespace hafkit {

/// Tolerance for physicality decisions on covariance matrices.
inline constexpr double kPhysTol = 1e-9;
/// Bound on the reconstruction residual of a built covariance matrix.
inline constexpr double kResidualBound = 1e-9;

/// The 2M x 2M block permutation [[0, I], [I, 0]].
ComplexMatrix x_matrix(int two_m);

/// A Gaussian covariance matrix in the (a, a^dagger) mode ordering together
/// with its symplectic spectrum. Physical instances have every symplectic
/// eigenvalue >= 1/2 (up to kPhysTol).
struct CovarianceMatrix {
    ComplexMatrix sigma;
    std::vector<double> symplectic_eigenvalues; ///< ascending, length M
};

/// One violated encodability condition with a diagnostic.
struct ConditionFailure {
    int condition = 0; ///< 1, 2 or 3
    std::string detail;
    double violation = 0.0;
};

/// Verdict on whether a scaled copy of R admits a Gaussian covariance matrix.
struct EncodabilityReport {
    bool encodable = false;
    std::vector<ConditionFailure> failures;
    /// Supremum of admissible scalings, 1 / ||R||_2; +infinity for R = 0.
    double c_max = 0.0;
    /// Filled by callers that also build the covariance matrix.
    std::optional<CovarianceMatrix> sigma;
};

/// Decides encodability of a 2M x 2M complex symmetric R: checks that
/// R11 = conj(R22) and R12 = R21^T, and that R12 is Hermitian positive
/// semidefinite; reports the admissible scaling interval (0, 1/||R||_2).
EncodabilityReport check_encodable(const ComplexMatrix& r);

/// Solves c R = X (I - (sigma + I/2)^{-1}) for sigma, i.e.
/// sigma = (I - c X R)^{-1} - I/2, validates the round-trip residual and
/// computes the symplectic spectrum. Requires an encodable R and
/// c strictly inside (0, 1/||R||_2).
CovarianceMatrix build_covariance(const ComplexMatrix& r, double c);

/// The M moduli of the eigenvalues of K sigma, K = diag(I, -I), which occur
/// in +/- pairs; computed through the Hermitian matrix S K S with S the PSD
/// square root of sigma (same spectrum), returned ascending.
std::vector<double> symplectic_spectrum(const ComplexMatrix& sigma);

/// The open admissible scaling interval (0, 1/||R||_2); the upper endpoint is
/// +infinity for R = 0.
std::pair<double, double> scale_interval(const ComplexMatrix& r);

} // namespace hafkit
