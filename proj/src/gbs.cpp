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

#include "hafkit/gbs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hafkit/errors.hpp"
#include "hafkit/linalg.hpp"

namespace hafkit {

namespace {

void require_even_symmetric(const ComplexMatrix& r, const char* what) {
    if (!r.is_square() || r.rows() % 2 != 0) {
        throw PreconditionError(std::string(what) + " requires a square matrix of even order");
    }
    if (!is_symmetric(r)) {
        throw PreconditionError(std::string(what) + " requires a complex symmetric matrix");
    }
}

ComplexMatrix block(const ComplexMatrix& r, int row_offset, int col_offset, int m) {
    ComplexMatrix out(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            out(i, j) = r(row_offset + i, col_offset + j);
        }
    }
    return out;
}

void hermitize(ComplexMatrix& m) {
    for (int i = 0; i < m.rows(); ++i) {
        m(i, i) = Complex(m(i, i).real(), 0.0);
        for (int j = i + 1; j < m.cols(); ++j) {
            const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = avg;
            m(j, i) = std::conj(avg);
        }
    }
}

} // namespace

ComplexMatrix x_matrix(int two_m) {
    if (two_m < 0 || two_m % 2 != 0) {
        throw PreconditionError("x_matrix needs an even nonnegative order");
    }
    const int m = two_m / 2;
    ComplexMatrix x(two_m, two_m);
    for (int i = 0; i < m; ++i) {
        x(i, m + i) = Complex(1.0, 0.0);
        x(m + i, i) = Complex(1.0, 0.0);
    }
    return x;
}

EncodabilityReport check_encodable(const ComplexMatrix& r) {
    require_even_symmetric(r, "check_encodable");
    const int m = r.rows() / 2;

    const ComplexMatrix r11 = block(r, 0, 0, m);
    const ComplexMatrix r12 = block(r, 0, m, m);
    const ComplexMatrix r21 = block(r, m, 0, m);
    const ComplexMatrix r22 = block(r, m, m, m);

    const double tol = std::max(kAbsoluteTolFloor, kRelativeTol * std::max(1.0, r.max_abs()));

    EncodabilityReport report;

    const double dev_diag = (m == 0) ? 0.0 : max_abs_diff(r11, r22.conjugate());
    const double dev_off = (m == 0) ? 0.0 : max_abs_diff(r12, r21.transpose());
    if (dev_diag > tol || dev_off > tol) {
        report.failures.push_back(
            {1, "R11 must equal conj(R22) and R12 must equal R21^T", std::max(dev_diag, dev_off)});
    }

    if (m > 0) {
        double herm_dev = 0.0;
        for (int i = 0; i < m; ++i) {
            for (int j = i; j < m; ++j) {
                herm_dev = std::max(herm_dev, std::abs(r12(i, j) - std::conj(r12(j, i))));
            }
        }
        if (herm_dev > tol) {
            report.failures.push_back({2, "R12 must be Hermitian", herm_dev});
        } else {
            const HermitianEigen eig = eigh(r12);
            const double lambda_min = eig.eigenvalues.front();
            const double scale =
                std::max(1.0, std::max(std::abs(eig.eigenvalues.front()),
                                       std::abs(eig.eigenvalues.back())));
            if (lambda_min < -kRelativeTol * scale) {
                report.failures.push_back(
                    {2, "R12 must be positive semidefinite", -lambda_min});
            }
        }
    }

    const double norm = spectral_norm(r);
    report.c_max = (norm == 0.0) ? std::numeric_limits<double>::infinity() : 1.0 / norm;
    report.encodable = report.failures.empty();
    return report;
}

CovarianceMatrix build_covariance(const ComplexMatrix& r, double c) {
    const EncodabilityReport report = check_encodable(r);
    if (!report.encodable) {
        throw PreconditionError("matrix is not encodable; covariance construction undefined");
    }
    if (!(c > 0.0) || !(c < report.c_max)) {
        throw PreconditionError("scaling constant must lie strictly inside (0, 1/||R||_2)");
    }

    const int n = r.rows();
    const ComplexMatrix x = x_matrix(n);
    const ComplexMatrix identity = ComplexMatrix::identity(n);

    // c ||X R||_2 = c ||R||_2 < 1, so I - c X R is invertible.
    ComplexMatrix sigma = inverse(identity - Complex(c, 0.0) * (x * r)) - 0.5 * identity;
    hermitize(sigma);

    // Round trip through the defining relation.
    const ComplexMatrix reconstructed = x * (identity - inverse(sigma + 0.5 * identity));
    const double residual = max_abs_diff(Complex(c, 0.0) * r, reconstructed);
    if (residual > kResidualBound) {
        throw NumericError("covariance round-trip residual exceeds bound");
    }

    CovarianceMatrix out;
    out.sigma = std::move(sigma);
    out.symplectic_eigenvalues = symplectic_spectrum(out.sigma);
    return out;
}

std::vector<double> symplectic_spectrum(const ComplexMatrix& sigma) {
    if (!sigma.is_square() || sigma.rows() % 2 != 0) {
        throw PreconditionError("symplectic_spectrum requires a square matrix of even order");
    }
    if (!is_hermitian(sigma)) {
        throw PreconditionError("symplectic_spectrum requires a Hermitian matrix");
    }
    const int n = sigma.rows();
    const int m = n / 2;
    if (m == 0) {
        return {};
    }

    const ComplexMatrix root = psd_sqrt(sigma);
    // S K S is Hermitian and shares its spectrum with K sigma.
    ComplexMatrix pencil(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Complex sum(0.0, 0.0);
            for (int k = 0; k < n; ++k) {
                const double sign = (k < m) ? 1.0 : -1.0;
                sum += root(i, k) * sign * root(k, j);
            }
            pencil(i, j) = sum;
        }
    }
    hermitize(pencil);

    const HermitianEigen eig = eigh(pencil);
    std::vector<double> moduli(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        moduli[static_cast<std::size_t>(i)] = std::abs(eig.eigenvalues[static_cast<std::size_t>(i)]);
    }
    std::sort(moduli.begin(), moduli.end());

    // The spectrum comes in +/- pairs; average each adjacent pair.
    std::vector<double> out(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        out[static_cast<std::size_t>(i)] =
            0.5 * (moduli[static_cast<std::size_t>(2 * i)] +
                   moduli[static_cast<std::size_t>(2 * i + 1)]);
    }
    return out;
}

std::pair<double, double> scale_interval(const ComplexMatrix& r) {
    require_even_symmetric(r, "scale_interval");
    const double norm = spectral_norm(r);
    return {0.0, norm == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / norm};
}

} // namespace hafkit
