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

#include "hafkit/hafnian.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "hafkit/combinatorics.hpp"
#include "hafkit/errors.hpp"
#include "hafkit/linalg.hpp"

namespace hafkit {

namespace {

// Compensated accumulation; terms of the block sum can cancel.
struct KahanSum {
    Complex sum{0.0, 0.0};
    Complex carry{0.0, 0.0};

    void add(Complex value) {
        const Complex y = value - carry;
        const Complex t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

void require_even_square(const ComplexMatrix& a, const char* what) {
    if (!a.is_square()) {
        throw PreconditionError(std::string(what) + " requires a square matrix");
    }
    if (a.rows() % 2 != 0) {
        throw PreconditionError(std::string(what) + " requires an even matrix order");
    }
}

// Pairs the smallest active index with every other active index in turn.
Complex hafnian_masked(const ComplexMatrix& a, std::uint32_t active) {
    if (active == 0) {
        return Complex(1.0, 0.0);
    }
    const int i = std::countr_zero(active);
    const std::uint32_t rest = active & (active - 1);
    Complex total(0.0, 0.0);
    std::uint32_t others = rest;
    while (others != 0) {
        const int j = std::countr_zero(others);
        others &= others - 1;
        const Complex aij = a(i, j);
        if (aij != Complex(0.0, 0.0)) {
            total += aij * hafnian_masked(a, rest & ~(std::uint32_t{1} << j));
        }
    }
    return total;
}

} // namespace

BlockMatrix::BlockMatrix(ComplexMatrix y, ComplexMatrix b) : y_(std::move(y)), b_(std::move(b)) {
    if (!y_.is_square() || !b_.is_square() || y_.rows() != b_.rows()) {
        throw PreconditionError("block matrix needs square Y and B of equal order");
    }
    if (!is_symmetric(y_)) {
        throw PreconditionError("block matrix requires complex symmetric Y");
    }
    if (!is_hermitian(b_)) {
        throw PreconditionError("block matrix requires Hermitian B");
    }
}

Complex hafnian(const ComplexMatrix& a) {
    require_even_square(a, "hafnian");
    if (a.rows() > kHafnianMaxOrder) {
        throw SizeError("hafnian order cap exceeded");
    }
    if (!is_symmetric(a)) {
        throw PreconditionError("hafnian requires a symmetric matrix");
    }
    const std::uint32_t all = (a.rows() == 0) ? 0 : ((std::uint32_t{1} << a.rows()) - 1);
    return hafnian_masked(a, all);
}

Complex hafnian_naive(const ComplexMatrix& a) {
    require_even_square(a, "hafnian_naive");
    if (a.rows() > kHafnianNaiveMaxOrder) {
        throw SizeError("hafnian_naive order cap exceeded");
    }
    if (!is_symmetric(a)) {
        throw PreconditionError("hafnian_naive requires a symmetric matrix");
    }
    const int two_m = a.rows();
    if (two_m == 0) {
        return Complex(1.0, 0.0);
    }
    const int m = two_m / 2;

    std::vector<int> perm(static_cast<std::size_t>(two_m));
    std::iota(perm.begin(), perm.end(), 0);
    Complex sum(0.0, 0.0);
    do {
        Complex product(1.0, 0.0);
        for (int j = 0; j < m; ++j) {
            product *= a(perm[static_cast<std::size_t>(2 * j)],
                         perm[static_cast<std::size_t>(2 * j + 1)]);
        }
        sum += product;
    } while (std::next_permutation(perm.begin(), perm.end()));

    const double normalization =
        static_cast<double>(factorial(m)) * std::ldexp(1.0, m); // M! 2^M
    return sum / normalization;
}

Complex permanent_ryser(const ComplexMatrix& b) {
    if (!b.is_square()) {
        throw PreconditionError("permanent requires a square matrix");
    }
    const int n = b.rows();
    if (n > kRyserMaxOrder) {
        throw SizeError("permanent_ryser order cap exceeded");
    }
    if (n == 0) {
        return Complex(1.0, 0.0);
    }

    // Inclusion-exclusion over column subsets S:
    //   per(b) = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} b(i, j),
    // visiting subsets in Gray-code order so each step updates one column.
    std::vector<Complex> row_sums(static_cast<std::size_t>(n), Complex(0.0, 0.0));
    Complex total(0.0, 0.0);
    std::uint32_t gray_prev = 0;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < count; ++k) {
        const std::uint32_t gray = static_cast<std::uint32_t>(k ^ (k >> 1));
        const std::uint32_t flipped = gray ^ gray_prev;
        const int j = std::countr_zero(flipped);
        const double direction = (gray & flipped) != 0 ? 1.0 : -1.0;
        for (int i = 0; i < n; ++i) {
            row_sums[static_cast<std::size_t>(i)] += direction * b(i, j);
        }
        gray_prev = gray;

        Complex product(1.0, 0.0);
        for (int i = 0; i < n; ++i) {
            product *= row_sums[static_cast<std::size_t>(i)];
        }
        total += (std::popcount(gray) % 2 == 0) ? product : -product;
    }
    return (n % 2 == 0) ? total : -total;
}

Complex permanent_naive(const ComplexMatrix& b) {
    if (!b.is_square()) {
        throw PreconditionError("permanent requires a square matrix");
    }
    const int n = b.rows();
    if (n > kPermanentNaiveMaxOrder) {
        throw SizeError("permanent_naive order cap exceeded");
    }
    if (n == 0) {
        return Complex(1.0, 0.0);
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Complex sum(0.0, 0.0);
    do {
        Complex product(1.0, 0.0);
        for (int i = 0; i < n; ++i) {
            product *= b(i, perm[static_cast<std::size_t>(i)]);
        }
        sum += product;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

Complex permanent_auto(const ComplexMatrix& b) {
    return (b.rows() < 5) ? permanent_naive(b) : permanent_ryser(b);
}

Complex hafnian_block(const BlockMatrix& ab) {
    const int m = ab.modes();
    const ComplexMatrix& y = ab.y();
    const ComplexMatrix& b = ab.b();

    KahanSum acc;
    for (int k = 0; 2 * k <= m; ++k) {
        const std::vector<IndexSequence> subsets = strict_subsets(2 * k, m);

        // haf(Y[alpha,alpha]) is reused across every beta; cache it per alpha
        // together with the complement index sets.
        std::vector<Complex> y_hafnians(subsets.size());
        std::vector<IndexSequence> complements(subsets.size());
        for (std::size_t i = 0; i < subsets.size(); ++i) {
            y_hafnians[i] = hafnian(submatrix(y, subsets[i], subsets[i]));
            complements[i] = complement(subsets[i], m);
        }

        for (std::size_t ia = 0; ia < subsets.size(); ++ia) {
            if (y_hafnians[ia] == Complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t ib = 0; ib < subsets.size(); ++ib) {
                if (y_hafnians[ib] == Complex(0.0, 0.0)) {
                    continue;
                }
                const Complex per = permanent_auto(submatrix(b, complements[ia], complements[ib]));
                acc.add(y_hafnians[ia] * per * std::conj(y_hafnians[ib]));
            }
        }
    }
    return acc.sum;
}

ComplexMatrix assemble(const BlockMatrix& ab) {
    const int m = ab.modes();
    const ComplexMatrix& y = ab.y();
    const ComplexMatrix& b = ab.b();
    ComplexMatrix a(2 * m, 2 * m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            a(i, j) = y(i, j);
            a(i, m + j) = b(i, j);
            a(m + i, j) = b(j, i);
            a(m + i, m + j) = std::conj(y(i, j));
        }
    }
    return a;
}

} // namespace hafkit
