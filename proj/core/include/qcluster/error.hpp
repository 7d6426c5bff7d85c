// Copyright 2026 The qcluster Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qcluster {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside the range an operation is defined on.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Vector or matrix sizes do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Torus elements built over different skew forms were combined.
class FormMismatch : public Error {
 public:
  using Error::Error;
};

/// Seed data violates an invariant (skew-symmetry, compatibility, ...).
class InvalidSeed : public Error {
 public:
  using Error::Error;
};

/// Malformed text input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Exponent overflow or a failed exact division. Signals a bug or an
/// input far outside desk scale.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcluster
