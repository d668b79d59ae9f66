// Copyright 2026 The effkit Authors
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

namespace effkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A matrix failed a structural check (Hermitian, effect, projection, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A ⊕ B is undefined because A + B leaves the effect interval.
class NotSummable : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input (matrix, descriptor or affine-map JSON).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A black-box map failed to evaluate or returned a malformed matrix.
class OracleError : public Error {
 public:
  using Error::Error;
};

/// Raised when a reconstruction step cannot certify its input.
class ReconstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace effkit
