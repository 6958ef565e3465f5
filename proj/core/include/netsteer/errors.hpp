// Copyright 2026 The netsteer Authors
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

namespace netsteer {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs that fail validation: malformed specs, out-of-range parameters,
/// invalid setting strings, unphysical states. The CLI maps these to exit 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class RangeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class HermiticityError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class PsdError : public ValidationError {
 public:
  PsdError(const std::string& what, double min_eigenvalue)
      : ValidationError(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

class SizeLimitError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidSettingError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ProjectorError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnstructuredSourceError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Inequality requested for a network size it is not defined on.
class WrongNError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Odd-n branch requested for even n, or vice versa.
class ParityError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The LHS never crosses the bound on [0, 1]. The CLI maps this to exit 3.
class NoCrossingError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure (e.g. a non-negligible imaginary part in a
/// Hermitian expectation). Signals a construction bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace netsteer
