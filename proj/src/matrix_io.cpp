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

#include "hafkit/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hafkit/errors.hpp"

namespace hafkit {

namespace {

using nlohmann::json;

json matrix_to_json_value(const ComplexMatrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            entries.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        }
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json_value(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
        throw ParseError("matrix document needs fields rows, cols, entries");
    }
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer() ||
        !j["entries"].is_array()) {
        throw ParseError("matrix fields have wrong types");
    }
    const long long rows = j["rows"].get<long long>();
    const long long cols = j["cols"].get<long long>();
    if (rows < 0 || cols < 0) {
        throw ParseError("matrix dimensions must be nonnegative");
    }
    const json& entries = j["entries"];
    if (entries.size() != static_cast<std::size_t>(rows * cols)) {
        throw ParseError("entries length must equal rows * cols");
    }
    std::vector<Complex> values;
    values.reserve(entries.size());
    for (const json& pair : entries) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw ParseError("each entry must be a [re, im] pair of numerals");
        }
        values.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    try {
        return ComplexMatrix(static_cast<int>(rows), static_cast<int>(cols), std::move(values));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot write file: " + path);
    }
    out << text << '\n';
}

} // namespace

std::string matrix_to_json(const ComplexMatrix& m) { return matrix_to_json_value(m).dump(); }

std::string block_to_json(const BlockMatrix& ab) {
    return json{{"m", ab.modes()},
                {"y", matrix_to_json_value(ab.y())},
                {"b", matrix_to_json_value(ab.b())}}
        .dump();
}

ComplexMatrix parse_matrix(const std::string& text) {
    return matrix_from_json_value(parse_document(text));
}

BlockMatrix parse_block(const std::string& text) {
    const json j = parse_document(text);
    if (!j.is_object() || !j.contains("m") || !j.contains("y") || !j.contains("b")) {
        throw ParseError("block document needs fields m, y, b");
    }
    if (!j["m"].is_number_integer()) {
        throw ParseError("field m must be an integer");
    }
    const long long m = j["m"].get<long long>();
    ComplexMatrix y = matrix_from_json_value(j["y"]);
    ComplexMatrix b = matrix_from_json_value(j["b"]);
    if (y.rows() != m || y.cols() != m || b.rows() != m || b.cols() != m) {
        throw ParseError("y and b must both be m x m");
    }
    return BlockMatrix(std::move(y), std::move(b)); // symmetry/Hermiticity validated here
}

ComplexMatrix load_matrix(const std::string& path) { return parse_matrix(read_file(path)); }

BlockMatrix load_block(const std::string& path) { return parse_block(read_file(path)); }

void save_matrix(const std::string& path, const ComplexMatrix& m) {
    write_file(path, matrix_to_json(m));
}

void save_block(const std::string& path, const BlockMatrix& ab) {
    write_file(path, block_to_json(ab));
}

std::string format_complex(Complex z) {
    char buffer[64];
    // + 0.0 folds a negative zero component into plain zero before printing
    std::snprintf(buffer, sizeof(buffer), "%.17g %.17g", z.real() + 0.0, z.imag() + 0.0);
    return buffer;
}

} // namespace hafkit
