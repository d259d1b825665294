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

#include <complex>
#include <vector>

namespace hafkit {

using Complex = std::complex<double>;

/// Dense complex matrix in row-major order. The universal carrier for every
/// computation in the library; all entries are finite (constructors reject
/// NaN and infinity).
class ComplexMatrix {
public:
    /// Empty 0x0 matrix.
    ComplexMatrix() = default;

    /// Zero-filled rows x cols matrix.
    ComplexMatrix(int rows, int cols);

    /// Matrix taking ownership of row-major entries. Throws PreconditionError
    /// if the entry count does not match or any entry is not finite.
    ComplexMatrix(int rows, int cols, std::vector<Complex> entries);

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int rows, int cols) { return ComplexMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_empty() const { return rows_ == 0 || cols_ == 0; }

    Complex& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Complex& operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    const std::vector<Complex>& entries() const { return entries_; }

    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix adjoint() const;

    /// Largest entry modulus; 0 for an empty matrix.
    double max_abs() const;
    double frobenius_norm() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex scalar, ComplexMatrix m) { return m *= scalar; }
    friend ComplexMatrix operator*(ComplexMatrix m, Complex scalar) { return m *= scalar; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> entries_;
};

/// max |a - b| over entries; matrices must have equal shape.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace hafkit
