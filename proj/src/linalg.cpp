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

#include "hafkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hafkit/errors.hpp"

namespace hafkit {

namespace {

constexpr int kJacobiMaxSweeps = 100;
constexpr double kJacobiOffDiagTol = 1e-14; // relative to the Frobenius norm
constexpr double kConditionCap = 1e14;

void require_square(const ComplexMatrix& m, const char* what) {
    if (!m.is_square()) {
        throw PreconditionError(std::string(what) + " requires a square matrix");
    }
}

double offdiag_frobenius(const ComplexMatrix& a) {
    double sum = 0.0;
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            if (i != j) {
                sum += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(sum);
}

} // namespace

double relative_tolerance(const ComplexMatrix& m) {
    return std::max(kAbsoluteTolFloor, kRelativeTol * m.frobenius_norm());
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    require_square(m, "is_hermitian");
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = i; j < m.cols(); ++j) {
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool is_hermitian(const ComplexMatrix& m) { return is_hermitian(m, relative_tolerance(m)); }

bool is_symmetric(const ComplexMatrix& m, double tol) {
    require_square(m, "is_symmetric");
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = i + 1; j < m.cols(); ++j) {
            if (std::abs(m(i, j) - m(j, i)) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool is_symmetric(const ComplexMatrix& m) { return is_symmetric(m, relative_tolerance(m)); }

HermitianEigen eigh(const ComplexMatrix& m) {
    require_square(m, "eigh");
    if (!is_hermitian(m)) {
        throw PreconditionError("eigh requires a Hermitian matrix");
    }
    const int n = m.rows();

    // Work on the exactly Hermitian average so rounding asymmetry in the
    // input cannot drift through the sweeps.
    ComplexMatrix a = m;
    for (int i = 0; i < n; ++i) {
        a(i, i) = Complex(a(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }

    ComplexMatrix u = ComplexMatrix::identity(n);
    const double off_target = kJacobiOffDiagTol * m.frobenius_norm();

    bool converged = offdiag_frobenius(a) <= off_target;
    for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex beta = a(p, q);
                const double abs_beta = std::abs(beta);
                if (abs_beta == 0.0) {
                    continue;
                }
                // Unitary rotation in the (p, q) plane chosen to zero a(p, q):
                // tan solves t^2 + 2*tau*t - 1 = 0 with tau = (a_qq - a_pp) / (2|beta|).
                const double alpha = a(p, p).real();
                const double gamma = a(q, q).real();
                const Complex phase = beta / abs_beta;
                const double tau = (gamma - alpha) / (2.0 * abs_beta);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex su = s * phase;
                const Complex su_conj = s * std::conj(phase);

                for (int k = 0; k < n; ++k) { // columns: a <- a J
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - su_conj * akq;
                    a(k, q) = su * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) { // rows: a <- J* a
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - su * aqk;
                    a(q, k) = su_conj * apk + c * aqk;
                }
                a(p, q) = Complex(0.0, 0.0);
                a(q, p) = Complex(0.0, 0.0);
                a(p, p) = Complex(a(p, p).real(), 0.0);
                a(q, q) = Complex(a(q, q).real(), 0.0);

                for (int k = 0; k < n; ++k) { // accumulate u <- u J
                    const Complex ukp = u(k, p);
                    const Complex ukq = u(k, q);
                    u(k, p) = c * ukp - su_conj * ukq;
                    u(k, q) = su * ukp + c * ukq;
                }
            }
        }
        converged = offdiag_frobenius(a) <= off_target;
    }
    if (!converged) {
        throw NumericError("eigh did not converge within the sweep cap");
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    HermitianEigen out;
    out.eigenvalues.resize(static_cast<std::size_t>(n));
    out.eigenvectors = ComplexMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        out.eigenvalues[static_cast<std::size_t>(j)] = a(order[static_cast<std::size_t>(j)],
                                                         order[static_cast<std::size_t>(j)])
                                                           .real();
        for (int i = 0; i < n; ++i) {
            out.eigenvectors(i, j) = u(i, order[static_cast<std::size_t>(j)]);
        }
    }
    return out;
}

bool is_psd(const ComplexMatrix& m, double tol) {
    const HermitianEigen eig = eigh(m);
    if (eig.eigenvalues.empty()) {
        return true;
    }
    const double lambda_min = eig.eigenvalues.front();
    const double lambda_abs_max =
        std::max(std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back()));
    return lambda_min >= -tol * std::max(1.0, lambda_abs_max);
}

bool is_psd(const ComplexMatrix& m) { return is_psd(m, kRelativeTol); }

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
    const HermitianEigen eig = eigh(m);
    const int n = m.rows();
    if (n == 0) {
        return m;
    }
    const double lambda_abs_max =
        std::max(std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back()));
    const double clamp = kRelativeTol * std::max(1.0, lambda_abs_max);
    if (eig.eigenvalues.front() < -clamp) {
        throw PreconditionError("psd_sqrt requires a positive semidefinite matrix");
    }

    const ComplexMatrix& u = eig.eigenvectors;
    ComplexMatrix root(n, n);
    // U sqrt(D) U*, with eigenvalues in [-clamp, 0) treated as 0.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Complex sum(0.0, 0.0);
            for (int k = 0; k < n; ++k) {
                const double lambda = std::max(0.0, eig.eigenvalues[static_cast<std::size_t>(k)]);
                sum += u(i, k) * std::sqrt(lambda) * std::conj(u(j, k));
            }
            root(i, j) = sum;
        }
    }
    // scrub rounding: the root is Hermitian by construction
    for (int i = 0; i < n; ++i) {
        root(i, i) = Complex(root(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (root(i, j) + std::conj(root(j, i)));
            root(i, j) = avg;
            root(j, i) = std::conj(avg);
        }
    }
    return root;
}

ComplexMatrix inverse(const ComplexMatrix& m) {
    require_square(m, "inverse");
    const int n = m.rows();
    ComplexMatrix work = m;
    ComplexMatrix result = ComplexMatrix::identity(n);

    double pivot_max = 0.0;
    double pivot_min = 0.0;
    for (int col = 0; col < n; ++col) {
        int pivot_row = col;
        double best = std::abs(work(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double candidate = std::abs(work(r, col));
            if (candidate > best) {
                best = candidate;
                pivot_row = r;
            }
        }
        if (best == 0.0) {
            throw NumericError("matrix is singular");
        }
        pivot_max = std::max(pivot_max, best);
        pivot_min = (col == 0) ? best : std::min(pivot_min, best);
        if (pivot_max / pivot_min > kConditionCap) {
            throw NumericError("condition estimate exceeds the cap");
        }
        if (pivot_row != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(work(col, j), work(pivot_row, j));
                std::swap(result(col, j), result(pivot_row, j));
            }
        }
        const Complex pivot = work(col, col);
        for (int j = 0; j < n; ++j) {
            work(col, j) /= pivot;
            result(col, j) /= pivot;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) {
                continue;
            }
            const Complex factor = work(r, col);
            if (factor == Complex(0.0, 0.0)) {
                continue;
            }
            for (int j = 0; j < n; ++j) {
                work(r, j) -= factor * work(col, j);
                result(r, j) -= factor * result(col, j);
            }
        }
    }
    return result;
}

Complex determinant(const ComplexMatrix& m) {
    require_square(m, "determinant");
    const int n = m.rows();
    ComplexMatrix work = m;
    Complex det(1.0, 0.0);
    for (int col = 0; col < n; ++col) {
        int pivot_row = col;
        double best = std::abs(work(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double candidate = std::abs(work(r, col));
            if (candidate > best) {
                best = candidate;
                pivot_row = r;
            }
        }
        if (best == 0.0) {
            return Complex(0.0, 0.0);
        }
        if (pivot_row != col) {
            for (int j = col; j < n; ++j) {
                std::swap(work(col, j), work(pivot_row, j));
            }
            det = -det;
        }
        const Complex pivot = work(col, col);
        det *= pivot;
        for (int r = col + 1; r < n; ++r) {
            const Complex factor = work(r, col) / pivot;
            for (int j = col; j < n; ++j) {
                work(r, j) -= factor * work(col, j);
            }
        }
    }
    return det;
}

double spectral_norm(const ComplexMatrix& m) {
    if (m.is_empty()) {
        return 0.0;
    }
    const ComplexMatrix gram = m.adjoint() * m;
    const HermitianEigen eig = eigh(gram);
    return std::sqrt(std::max(0.0, eig.eigenvalues.back()));
}

bool loewner_geq(const ComplexMatrix& l, const ComplexMatrix& b, double tol) {
    if (l.rows() != b.rows() || l.cols() != b.cols()) {
        throw PreconditionError("loewner_geq requires matrices of equal shape");
    }
    if (!is_hermitian(l) || !is_hermitian(b)) {
        throw PreconditionError("loewner_geq requires Hermitian matrices");
    }
    return is_psd(l - b, tol);
}

bool loewner_geq(const ComplexMatrix& l, const ComplexMatrix& b) {
    return loewner_geq(l, b, kRelativeTol);
}

} // namespace hafkit
