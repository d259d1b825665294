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

#include "hafkit/induced.hpp"

#include <cmath>

#include "hafkit/errors.hpp"
#include "hafkit/hafnian.hpp"

namespace hafkit {

namespace {

void check_guard(int base, int r) {
    if (binomial(base + r - 1, r) > kInducedDimensionGuard) {
        throw SizeError("induced matrix dimension guard exceeded");
    }
}

std::vector<double> mu_weights(const std::vector<IndexSequence>& sequences) {
    std::vector<double> w(sequences.size());
    for (std::size_t i = 0; i < sequences.size(); ++i) {
        w[i] = static_cast<double>(mu(sequences[i]));
    }
    return w;
}

} // namespace

InducedMatrix induced_p(const ComplexMatrix& q, int r) {
    if (r < 1) {
        throw PreconditionError("induced order r must be at least 1");
    }
    if (q.rows() < 1 || q.cols() < 1) {
        throw PreconditionError("induced matrix needs a nonempty base matrix");
    }
    check_guard(q.rows(), r);
    check_guard(q.cols(), r);

    InducedMatrix out;
    out.r = r;
    out.row_index = nondecreasing_sequences(r, q.rows());
    out.col_index = nondecreasing_sequences(r, q.cols());

    const std::vector<double> mu_rows = mu_weights(out.row_index);
    const std::vector<double> mu_cols = mu_weights(out.col_index);

    out.data = ComplexMatrix(static_cast<int>(out.row_index.size()),
                             static_cast<int>(out.col_index.size()));
    for (std::size_t i = 0; i < out.row_index.size(); ++i) {
        for (std::size_t j = 0; j < out.col_index.size(); ++j) {
            const Complex per = permanent_auto(submatrix(q, out.row_index[i], out.col_index[j]));
            out.data(static_cast<int>(i), static_cast<int>(j)) =
                per / std::sqrt(mu_rows[i] * mu_cols[j]);
        }
    }
    return out;
}

ComplexMatrix induced_c(const ComplexMatrix& b, int r) {
    if (!b.is_square()) {
        throw PreconditionError("induced_c requires a square matrix");
    }
    InducedMatrix p = induced_p(b, r);
    const std::vector<double> weights = mu_weights(p.row_index);
    // F P_r(B) F with the diagonal scaler kept as a vector.
    for (std::size_t i = 0; i < weights.size(); ++i) {
        for (std::size_t j = 0; j < weights.size(); ++j) {
            p.data(static_cast<int>(i), static_cast<int>(j)) *=
                std::sqrt(weights[i]) * std::sqrt(weights[j]);
        }
    }
    return std::move(p.data);
}

ComplexMatrix subset_permanent_matrix(const ComplexMatrix& b, int size) {
    if (!b.is_square()) {
        throw PreconditionError("subset_permanent_matrix requires a square matrix");
    }
    if (size < 0 || size > b.rows()) {
        throw PreconditionError("subset size must lie in [0, M]");
    }
    const std::vector<IndexSequence> subsets = strict_subsets(size, b.rows());
    ComplexMatrix out(static_cast<int>(subsets.size()), static_cast<int>(subsets.size()));
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (std::size_t j = 0; j < subsets.size(); ++j) {
            out(static_cast<int>(i), static_cast<int>(j)) =
                permanent_auto(submatrix(b, subsets[i], subsets[j]));
        }
    }
    return out;
}

} // namespace hafkit
