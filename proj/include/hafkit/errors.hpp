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

#include <stdexcept>

namespace hafkit {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical precondition does not hold: wrong dimensions, odd order,
/// asymmetry, a scaling constant outside its admissible interval, ...
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An explicit size cap or dimension guard was exceeded.
class SizeError : public Error {
public:
    using Error::Error;
};

/// A numerical procedure failed: no convergence, singular pivot,
/// residual above its bound.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Malformed input file or value.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace hafkit
