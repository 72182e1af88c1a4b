//
// Copyright 2026 The GFDP Authors
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
//

#ifndef GFDP_ERRORS_H_
#define GFDP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace gfdp {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument is outside its documented domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A dense materialization would exceed the configured size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Non-finite values or a failed numerical step.
class NumericError : public Error {
 public:
  using Error::Error;
};

// An operation was called in a state that does not allow it.
class StateError : public Error {
 public:
  using Error::Error;
};

// Throws ParameterError with `message` when `condition` is false.
void Require(bool condition, const std::string& message);

}  // namespace gfdp

#endif  // GFDP_ERRORS_H_
