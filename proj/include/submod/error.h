// Copyright 2026 The Authors.
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

#ifndef SUBMOD_ERROR_H_
#define SUBMOD_ERROR_H_

#include <stdexcept>
#include <string>

namespace submod {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An element id outside 0..n-1.
class InvalidElementError : public Error {
 public:
  using Error::Error;
};

// Malformed input: dimension mismatch, out-of-range coordinate, bad file.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Exact enumeration requested above the supported size.
class BackendLimitError : public Error {
 public:
  using Error::Error;
};

// No feasible solution exists for the requested constraint.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// The simplex failed to terminate within its iteration guard.
class NumericalFailureError : public Error {
 public:
  using Error::Error;
};

}  // namespace submod

#endif  // SUBMOD_ERROR_H_
