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

#include <cstdlib>
#include <filesystem>
#include <string>

#include "hafkit/errors.hpp"
#include "hafkit/matrix_io.hpp"
#include "hafkit/verify.hpp"

using namespace hafkit;

TEST_CASE("matrix serialization round-trips bit-exactly") {
    for (int trial = 0; trial < 10; ++trial) {
        // spread the exponent range to stress the numeral rendering
        const double magnitude = std::pow(10.0, 6.0 * (trial % 5) - 12.0);
        InstanceGenerator gen(500 + static_cast<std::uint64_t>(trial), 3, magnitude);
        const ComplexMatrix m = gen.dense(3, 4);
        const ComplexMatrix back = parse_matrix(matrix_to_json(m));
        CHECK(back == m); // bitwise equality of every entry
    }

    const ComplexMatrix empty;
    CHECK(parse_matrix(matrix_to_json(empty)) == empty);
}

TEST_CASE("parsing a fixed document") {
    const ComplexMatrix m =
        parse_matrix(R"({"rows": 2, "cols": 2, "entries": [[0,0],[1,0],[1,0],[0,0]]})");
    CHECK(m.rows() == 2);
    CHECK(m(0, 1) == Complex(1.0, 0.0));
    CHECK(m(0, 0) == Complex(0.0, 0.0));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_matrix("not json"), ParseError);
    CHECK_THROWS_AS(parse_matrix("[]"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"rows": 2, "cols": 2})"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"rows": 1, "cols": 2, "entries": [[0,0]]})"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"rows": 1, "cols": 1, "entries": [[0]]})"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"rows": 1, "cols": 1, "entries": [["a",0]]})"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"rows": -1, "cols": 1, "entries": []})"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"rows": 1.5, "cols": 1, "entries": [[0,0]]})"), ParseError);
}

TEST_CASE("block documents") {
    InstanceGenerator gen(601, 3);
    const BlockMatrix ab(gen.symmetric(), gen.hermitian());
    const BlockMatrix back = parse_block(block_to_json(ab));
    CHECK(back.y() == ab.y());
    CHECK(back.b() == ab.b());
    CHECK(back.modes() == 3);

    CHECK_THROWS_AS(parse_block(R"({"m": 1, "y": {"rows":1,"cols":1,"entries":[[0,0]]}})"),
                    ParseError);
    // m disagrees with the payload shape
    CHECK_THROWS_AS(
        parse_block(
            R"({"m": 2, "y": {"rows":1,"cols":1,"entries":[[0,0]]}, "b": {"rows":1,"cols":1,"entries":[[1,0]]}})"),
        ParseError);
    // structurally sound but Y is not symmetric
    CHECK_THROWS_AS(
        parse_block(
            R"({"m": 2, "y": {"rows":2,"cols":2,"entries":[[0,0],[1,0],[2,0],[0,0]]}, "b": {"rows":2,"cols":2,"entries":[[1,0],[0,0],[0,0],[1,0]]}})"),
        PreconditionError);
    // ... and B is not Hermitian
    CHECK_THROWS_AS(
        parse_block(
            R"({"m": 1, "y": {"rows":1,"cols":1,"entries":[[0,0]]}, "b": {"rows":1,"cols":1,"entries":[[0,1]]}})"),
        PreconditionError);
}

TEST_CASE("file round trip") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "hafkit_io_test";
    fs::create_directories(dir);

    InstanceGenerator gen(701, 4);
    const ComplexMatrix m = gen.dense(4, 4);
    const std::string path = (dir / "matrix.json").string();
    save_matrix(path, m);
    CHECK(load_matrix(path) == m);

    const BlockMatrix ab(gen.symmetric(), gen.hermitian());
    const std::string block_path = (dir / "block.json").string();
    save_block(block_path, ab);
    CHECK(load_block(block_path).y() == ab.y());

    CHECK_THROWS_AS(load_matrix((dir / "missing.json").string()), ParseError);
    fs::remove_all(dir);
}

TEST_CASE("format_complex round-trips through strtod") {
    const Complex values[] = {Complex(1.0, 0.0), Complex(1.0 / 3.0, -2.5e-17),
                              Complex(6.02214076e23, -1.0 / 7.0), Complex(0.0, -0.0)};
    for (const Complex& z : values) {
        const std::string text = format_complex(z);
        char* rest = nullptr;
        const double re = std::strtod(text.c_str(), &rest);
        const double im = std::strtod(rest, nullptr);
        CHECK(re == z.real());
        CHECK(im == z.imag());
    }
    CHECK(format_complex(Complex(1.0, 0.0)) == "1 0");
    CHECK(format_complex(Complex(28.0, 0.0)) == "28 0");
}
