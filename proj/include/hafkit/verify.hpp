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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hafkit/complex_matrix.hpp"

namespace hafkit {

// Assertion tolerances of the property suites, relative to max(1, |value|).
inline constexpr double kNonnegativityTol = 1e-9;
inline constexpr double kMonotonicityTol = 1e-9;
inline constexpr double kSchurTol = 1e-9;
inline constexpr double kInducedIdentityTol = 1e-12; // absolute
inline constexpr double kInducedTol = 1e-9;
inline constexpr double kBlockFormulaTol = 1e-10;

/// Deterministic instance source: SplitMix64 as the counter-based core,
/// complex Gaussian entries via Box-Muller. The same seed always reproduces
/// the same instance stream.
class InstanceGenerator {
public:
    InstanceGenerator(std::uint64_t seed, int m, double magnitude = 1.0);

    int modes() const { return m_; }

    std::uint64_t next_u64();
    double uniform(); ///< [0, 1)
    Complex gaussian();

    /// Plain matrix of independent complex Gaussian entries.
    ComplexMatrix dense(int rows, int cols);
    /// (Z + Z^T) / 2 -- complex symmetric, m x m.
    ComplexMatrix symmetric();
    /// (Z + Z*) / 2 -- Hermitian, generally indefinite, m x m.
    ComplexMatrix hermitian();
    /// Gram matrix G* G with G m x m -- positive semidefinite.
    ComplexMatrix psd();
    /// Gram matrix of an (m-1) x m factor -- singular PSD (zero matrix for m = 1).
    ComplexMatrix psd_singular();

private:
    std::uint64_t state_;
    int m_;
    double magnitude_;
};

/// Outcome of one randomized property check.
struct PropertyReport {
    std::string property_name;
    long trials = 0;
    long failures = 0;
    double worst_violation = 0.0;
    /// Serialized first failing instance (JSON); present iff failures > 0.
    std::optional<std::string> witness;
};

/// One line per report: "<name> trials=<n> failures=<n> worst=<v> witness=<path>".
std::string report_line(const PropertyReport& report, const std::string& witness_path);

// Each suite runs `trials` trials per matrix order 1..m_max (n_max for the
// permanent/determinant suite), seeding one generator per order. Every 4th
// trial draws the singular PSD variant where a PSD instance is needed, so
// boundary cases stay at a fixed 25% of the stream.

/// haf(A(Y, B)) is real and nonnegative for symmetric Y and PSD Hermitian B.
PropertyReport verify_nonnegativity(int trials, int m_max, std::uint64_t seed);

/// haf(A(Y, L)) >= haf(A(Y, B)) whenever L >= B in the Loewner order.
PropertyReport verify_monotonicity(int trials, int m_max, std::uint64_t seed);

/// per(B) >= det(B) >= 0 for PSD B.
PropertyReport verify_schur(int trials, int n_max, std::uint64_t seed);

/// The four induced-matrix claims, one report each: P_r identity on I,
/// multiplicativity over products, PSD preservation, Loewner monotonicity.
std::vector<PropertyReport> verify_induced_suite(int trials, std::uint64_t seed);

/// hafnian_block agrees with the direct hafnian of the assembled matrix,
/// for Hermitian (not necessarily PSD) B.
PropertyReport verify_block_formula(int trials, int m_max, std::uint64_t seed);

} // namespace hafkit
