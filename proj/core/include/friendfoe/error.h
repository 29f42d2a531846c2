// Copyright 2026 The Friendfoe Authors
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

#ifndef FRIENDFOE_ERROR_H_
#define FRIENDFOE_ERROR_H_

#include <stdexcept>
#include <string>

namespace friendfoe {

// Base class for all library errors: invalid arguments, violated
// preconditions and malformed inputs.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an iteration produces NaN or infinite log-weights.
class NumericalDivergence : public Error {
 public:
  explicit NumericalDivergence(const std::string& what) : Error(what) {}
};

// Raised when input data is insufficient for an estimator.
class InsufficientData : public Error {
 public:
  explicit InsufficientData(const std::string& what) : Error(what) {}
};

// Raised for malformed input documents.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace friendfoe

#endif  // FRIENDFOE_ERROR_H_
