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

#include "hafkit/combinatorics.hpp"
#include "hafkit/complex_matrix.hpp"

namespace hafkit {

/// Bound on each induced dimension C(m+r-1, r); keeps the entry grid in memory.
inline constexpr std::uint64_t kInducedDimensionGuard = 10000;

/// The r-th induced matrix of Q: entries per(Q[alpha, beta]) / sqrt(mu(alpha) mu(beta))
/// over nondecreasing sequences alpha, beta in lexicographic order. Multiplicative
/// over matrix products and PSD-preserving on Hermitian input.
struct InducedMatrix {
    int r = 1;
    std::vector<IndexSequence> row_index;
    std::vector<IndexSequence> col_index;
    ComplexMatrix data;
};

/// P_r(Q) for an m x n matrix Q; P_1(Q) = Q. Throws SizeError when an induced
/// dimension exceeds kInducedDimensionGuard.
InducedMatrix induced_p(const ComplexMatrix& q, int r);

/// C_r(B) = F P_r(B) F with F = diag(sqrt(mu(alpha))); its entries are the raw
/// subset permanents per(B[alpha, beta]).
ComplexMatrix induced_c(const ComplexMatrix& b, int r);

/// The C(M, size)-square matrix of permanents per(B[gamma, delta]) over strict
/// size-subsets of [M]; a principal submatrix of C_size(B). size 0 -> [[1]].
ComplexMatrix subset_permanent_matrix(const ComplexMatrix& b, int size);

} // namespace hafkit
