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

#ifndef FANLAB_ERROR_HPP_
#define FANLAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace fanlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input does not satisfy the documented preconditions of an operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Two computations that must agree did not. Always a bug or a false claim.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

// Malformed JSON or a document that does not match the expected shape.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace fanlab

#endif  // FANLAB_ERROR_HPP_
