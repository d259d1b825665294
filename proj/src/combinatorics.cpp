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

#include "hafkit/combinatorics.hpp"

#include <algorithm>

namespace hafkit {

std::uint64_t factorial(int n) {
    if (n < 0) {
        throw PreconditionError("factorial of a negative number");
    }
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) {
        r *= static_cast<std::uint64_t>(i);
    }
    return r;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // exact at every step: r * (n - k + i) is divisible by i
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

std::uint64_t double_factorial(int n) {
    if (n < -1 || n % 2 == 0) {
        throw PreconditionError("double factorial is defined here for odd n >= -1");
    }
    std::uint64_t r = 1;
    for (int i = n; i >= 3; i -= 2) {
        r *= static_cast<std::uint64_t>(i);
    }
    return r;
}

std::int64_t mu(const IndexSequence& alpha) {
    for (std::size_t s = 0; s < alpha.size(); ++s) {
        if (alpha[s] < 1 || (s > 0 && alpha[s] < alpha[s - 1])) {
            throw PreconditionError("index sequence must be nondecreasing with 1-based entries");
        }
    }
    std::int64_t product = 1;
    std::size_t s = 0;
    while (s < alpha.size()) {
        std::size_t run = 1;
        while (s + run < alpha.size() && alpha[s + run] == alpha[s]) {
            ++run;
        }
        product *= static_cast<std::int64_t>(factorial(static_cast<int>(run)));
        s += run;
    }
    return product;
}

std::vector<IndexSequence> nondecreasing_sequences(int k, int n) {
    if (k < 0 || n < 1) {
        throw PreconditionError("nondecreasing sequences need k >= 0 and n >= 1");
    }
    std::vector<IndexSequence> out;
    out.reserve(static_cast<std::size_t>(binomial(n + k - 1, k)));
    IndexSequence current(static_cast<std::size_t>(k));

    auto recurse = [&](auto&& self, int pos, int low) -> void {
        if (pos == k) {
            out.push_back(current);
            return;
        }
        for (int v = low; v <= n; ++v) {
            current[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v);
        }
    };
    recurse(recurse, 0, 1);
    return out;
}

std::vector<IndexSequence> strict_subsets(int size, int n) {
    if (size < 0 || n < 0 || size > n) {
        throw PreconditionError("subset size must lie in [0, n]");
    }
    std::vector<IndexSequence> out;
    out.reserve(static_cast<std::size_t>(binomial(n, size)));
    IndexSequence current(static_cast<std::size_t>(size));

    auto recurse = [&](auto&& self, int pos, int low) -> void {
        if (pos == size) {
            out.push_back(current);
            return;
        }
        for (int v = low; v <= n - (size - pos - 1); ++v) {
            current[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v + 1);
        }
    };
    recurse(recurse, 0, 1);
    return out;
}

IndexSequence complement(const IndexSequence& alpha, int n) {
    std::vector<bool> taken(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t s = 0; s < alpha.size(); ++s) {
        const int v = alpha[s];
        if (v < 1 || v > n || (s > 0 && v <= alpha[s - 1])) {
            throw PreconditionError("complement needs a strictly increasing subset of [1, n]");
        }
        taken[static_cast<std::size_t>(v)] = true;
    }
    IndexSequence out;
    out.reserve(static_cast<std::size_t>(n) - alpha.size());
    for (int v = 1; v <= n; ++v) {
        if (!taken[static_cast<std::size_t>(v)]) {
            out.push_back(v);
        }
    }
    return out;
}

ComplexMatrix submatrix(const ComplexMatrix& q, const IndexSequence& alpha,
                        const IndexSequence& beta) {
    for (int a : alpha) {
        if (a < 1 || a > q.rows()) {
            throw PreconditionError("row index out of range in submatrix");
        }
    }
    for (int b : beta) {
        if (b < 1 || b > q.cols()) {
            throw PreconditionError("column index out of range in submatrix");
        }
    }
    ComplexMatrix out(static_cast<int>(alpha.size()), static_cast<int>(beta.size()));
    for (std::size_t s = 0; s < alpha.size(); ++s) {
        for (std::size_t t = 0; t < beta.size(); ++t) {
            out(static_cast<int>(s), static_cast<int>(t)) = q(alpha[s] - 1, beta[t] - 1);
        }
    }
    return out;
}

std::vector<Matching> perfect_matchings(int two_m) {
    std::vector<Matching> out;
    if (two_m >= 0 && two_m % 2 == 0) {
        out.reserve(static_cast<std::size_t>(double_factorial(two_m - 1)));
    }
    for_each_perfect_matching(two_m, [&](const Matching& m) { out.push_back(m); });
    return out;
}

} // namespace hafkit
