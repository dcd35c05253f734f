// Copyright 2026 The curvlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace curvlab {

/// Base of every error raised by the library. The CLI maps these to exit
/// code 2; anything else escaping a command is an internal error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Points or circles that do not determine a unique object (equal points,
/// antipodal points, identical lines, collinear triangle vertices).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// The operation needs a closed patch, a convergent quadrature, or some
/// other state the input does not have.
class StateError : public Error {
 public:
  using Error::Error;
};

}  // namespace curvlab
