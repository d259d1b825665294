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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>

#include "hafkit/complex_matrix.hpp"
#include "hafkit/errors.hpp"

using namespace hafkit;

TEST_CASE("construction and element access") {
    ComplexMatrix m(2, 3);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m(1, 2) == Complex(0.0, 0.0));

    m(0, 1) = Complex(1.0, -2.0);
    CHECK(m(0, 1) == Complex(1.0, -2.0));

    ComplexMatrix empty;
    CHECK(empty.is_empty());
    CHECK(empty.rows() == 0);
}

TEST_CASE("constructor rejects bad input") {
    CHECK_THROWS_AS(ComplexMatrix(2, 2, {Complex(1, 0)}), PreconditionError);
    const double inf = std::numeric_limits<double>::infinity();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(inf, 0)}), PreconditionError);
    CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(0, nan)}), PreconditionError);
    CHECK_THROWS_AS(ComplexMatrix(-1, 1), PreconditionError);
}

TEST_CASE("transpose, conjugate, adjoint") {
    const ComplexMatrix m(2, 2, {Complex(1, 1), Complex(2, 0), Complex(0, 3), Complex(4, -4)});
    CHECK(m.transpose()(0, 1) == Complex(0, 3));
    CHECK(m.conjugate()(0, 0) == Complex(1, -1));
    CHECK(m.adjoint()(1, 0) == Complex(2, 0));
    CHECK(m.adjoint()(0, 1) == Complex(0, -3));
}

TEST_CASE("arithmetic") {
    const ComplexMatrix a(2, 2, {Complex(1, 0), Complex(2, 0), Complex(3, 0), Complex(4, 0)});
    const ComplexMatrix id = ComplexMatrix::identity(2);

    CHECK((a + id)(0, 0) == Complex(2, 0));
    CHECK((a - a).max_abs() == 0.0);
    CHECK((Complex(2, 0) * a)(1, 1) == Complex(8, 0));
    CHECK(a * id == a);
    CHECK(id * a == a);

    const ComplexMatrix sq = a * a;
    CHECK(sq(0, 0) == Complex(7, 0));
    CHECK(sq(0, 1) == Complex(10, 0));
    CHECK(sq(1, 0) == Complex(15, 0));
    CHECK(sq(1, 1) == Complex(22, 0));

    CHECK_THROWS_AS(a + ComplexMatrix(1, 2), PreconditionError);
    CHECK_THROWS_AS(a * ComplexMatrix(3, 2), PreconditionError);
}

TEST_CASE("norms") {
    const ComplexMatrix m(1, 2, {Complex(3, 4), Complex(0, 0)});
    CHECK(m.max_abs() == doctest::Approx(5.0));
    CHECK(m.frobenius_norm() == doctest::Approx(5.0));
    CHECK(max_abs_diff(m, m) == 0.0);
    CHECK_THROWS_AS(max_abs_diff(m, ComplexMatrix(2, 1)), PreconditionError);
}
