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

#include <string>

#include "hafkit/complex_matrix.hpp"
#include "hafkit/hafnian.hpp"

namespace hafkit {

// Matrix files are JSON documents
//   {"rows": R, "cols": C, "entries": [[re, im], ...]}   (row-major)
// and block files wrap two of them:
//   {"m": M, "y": <matrix>, "b": <matrix>}.
// Serialization renders doubles with shortest round-trip numerals, so
// parse(serialize(m)) reproduces m bit for bit.

std::string matrix_to_json(const ComplexMatrix& m);
std::string block_to_json(const BlockMatrix& ab);

/// Parses a matrix document. Structural problems raise ParseError.
ComplexMatrix parse_matrix(const std::string& text);

/// Parses a block document. Structural problems raise ParseError; a Y that is
/// not symmetric or a B that is not Hermitian raises PreconditionError.
BlockMatrix parse_block(const std::string& text);

ComplexMatrix load_matrix(const std::string& path);
BlockMatrix load_block(const std::string& path);

void save_matrix(const std::string& path, const ComplexMatrix& m);
void save_block(const std::string& path, const BlockMatrix& ab);

/// "re im" with 17 significant digits (enough for exact double round trip).
std::string format_complex(Complex z);

} // namespace hafkit
