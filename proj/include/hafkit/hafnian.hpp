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

#include "hafkit/complex_matrix.hpp"

namespace hafkit {

inline constexpr int kHafnianMaxOrder = 20;      // direct matching enumeration
inline constexpr int kHafnianNaiveMaxOrder = 8;  // permutation-sum oracle
inline constexpr int kRyserMaxOrder = 25;
inline constexpr int kPermanentNaiveMaxOrder = 9;

/// The pair (Y, B) standing for the 2M x 2M complex symmetric matrix
/// [[Y, B], [B^T, conj(Y)]] with Y complex symmetric and B Hermitian,
/// stored without the redundant half.
class BlockMatrix {
public:
    /// Validates that y and b are square of equal order, y symmetric and
    /// b Hermitian within the default tolerance.
    BlockMatrix(ComplexMatrix y, ComplexMatrix b);

    const ComplexMatrix& y() const { return y_; }
    const ComplexMatrix& b() const { return b_; }
    int modes() const { return y_.rows(); }

private:
    ComplexMatrix y_;
    ComplexMatrix b_;
};

/// Hafnian by direct enumeration of perfect matchings: the sum over all
/// matchings of [2M] of the products of matched entries. Only the upper
/// triangle is read; the diagonal never is. Empty matrix -> 1.
Complex hafnian(const ComplexMatrix& a);

/// Permutation-sum oracle evaluating the normalized hafnian sum
/// (1 / (M! 2^M)) sum over all (2M)! permutations literally. Order <= 8.
Complex hafnian_naive(const ComplexMatrix& a);

/// Permanent by Ryser inclusion-exclusion with Gray-code column updates,
/// O(2^n n). Empty matrix -> 1. Order <= 25.
Complex permanent_ryser(const ComplexMatrix& b);

/// Permanent by direct expansion over all n! permutations. Order <= 9.
Complex permanent_naive(const ComplexMatrix& b);

/// Dispatcher used by the induced-matrix and block kernels: direct expansion
/// below order 5 (smaller constant), Ryser otherwise. Results identical.
Complex permanent_auto(const ComplexMatrix& b);

/// Hafnian of A(Y, B) through the block decomposition: sum over k and over
/// strict 2k-subsets alpha, beta of [M] of
///   haf(Y[alpha,alpha]) per(B[comp(alpha), comp(beta)]) conj(haf(Y[beta,beta])),
/// with compensated accumulation and the Y-subhafnians cached per alpha.
Complex hafnian_block(const BlockMatrix& ab);

/// The assembled 2M x 2M matrix [[Y, B], [B^T, conj(Y)]].
ComplexMatrix assemble(const BlockMatrix& ab);

} // namespace hafkit
