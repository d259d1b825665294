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
#include <utility>
#include <vector>

#include "hafkit/complex_matrix.hpp"
#include "hafkit/errors.hpp"

namespace hafkit {

/// A sequence of 1-based indices. Nondecreasing sequences index induced
/// matrices, strictly increasing ones act as subsets of [n].
using IndexSequence = std::vector<int>;

/// A perfect matching of [1, 2M]: M disjoint unordered pairs covering
/// every index exactly once.
struct Matching {
    std::vector<std::pair<int, int>> pairs;
};

std::uint64_t factorial(int n);
std::uint64_t binomial(int n, int k);

/// n!! for odd n >= -1; (-1)!! = 1. Counts the perfect matchings of [n+1].
std::uint64_t double_factorial(int n);

/// Product of the factorials of the multiplicities of the distinct values
/// in a nondecreasing sequence.
std::int64_t mu(const IndexSequence& alpha);

/// All nondecreasing length-k sequences over [1, n], lexicographic.
/// There are C(n+k-1, k) of them.
std::vector<IndexSequence> nondecreasing_sequences(int k, int n);

/// All strictly increasing length-size sequences over [1, n], lexicographic.
std::vector<IndexSequence> strict_subsets(int size, int n);

/// Sorted complement [n] \ alpha for a strictly increasing alpha.
IndexSequence complement(const IndexSequence& alpha, int n);

/// Submatrix q[alpha, beta] in sequence order; repeated indices repeat the
/// corresponding row/column.
ComplexMatrix submatrix(const ComplexMatrix& q, const IndexSequence& alpha,
                        const IndexSequence& beta);

/// Visits every perfect matching of [1, two_m] exactly once by always pairing
/// the smallest unmatched index with each larger unmatched index in turn.
/// For two_m = 0 visits the single empty matching.
template <typename Visit>
void for_each_perfect_matching(int two_m, Visit&& visit) {
    if (two_m < 0 || two_m % 2 != 0) {
        throw PreconditionError("perfect matchings need an even nonnegative ground set");
    }
    std::vector<int> unmatched(static_cast<std::size_t>(two_m));
    for (int i = 0; i < two_m; ++i) {
        unmatched[static_cast<std::size_t>(i)] = i + 1;
    }
    Matching current;
    current.pairs.reserve(static_cast<std::size_t>(two_m / 2));

    // Recursive lambda over the shrinking unmatched list.
    auto recurse = [&](auto&& self) -> void {
        if (unmatched.empty()) {
            visit(static_cast<const Matching&>(current));
            return;
        }
        const int first = unmatched.front();
        std::vector<int> rest(unmatched.begin() + 1, unmatched.end());
        for (std::size_t t = 0; t < rest.size(); ++t) {
            const int partner = rest[t];
            current.pairs.emplace_back(first, partner);
            std::vector<int> next;
            next.reserve(rest.size() - 1);
            for (std::size_t s = 0; s < rest.size(); ++s) {
                if (s != t) {
                    next.push_back(rest[s]);
                }
            }
            unmatched.swap(next);
            self(self);
            unmatched.swap(next);
            current.pairs.pop_back();
        }
    };
    recurse(recurse);
}

/// Materialized perfect matchings, in the enumeration order above.
std::vector<Matching> perfect_matchings(int two_m);

} // namespace hafkit
