// Copyright 2026 The edfnorm Authors
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

#ifndef EDFNORM_ERRORS_H_
#define EDFNORM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace edfnorm {

// Base of every exception thrown by the library. The CLI maps it to exit 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (p outside (0,1), bad theta, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A function evaluated to NaN or infinity where a finite value was required.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, double at)
      : Error(what), at_(at) {}
  double at() const { return at_; }

 private:
  double at_;
};

// An iterative method stopped without meeting its tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last_estimate,
                   double residual)
      : Error(what), last_estimate_(last_estimate), residual_(residual) {}
  double last_estimate() const { return last_estimate_; }
  double residual() const { return residual_; }

 private:
  double last_estimate_;
  double residual_;
};

// Sample has zero spread, so the fitted scale is zero.
class DegenerateSampleError : public Error {
 public:
  using Error::Error;
};

// A slope needs a spectral or diagonal-sup input that was not supplied.
class MissingInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace edfnorm

#endif  // EDFNORM_ERRORS_H_
