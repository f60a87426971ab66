// Copyright 2026 The rydrep Authors
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

namespace rydrep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter or argument violates a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A state or channel failed the trace / Hermiticity / PSD / CPTP checks.
class PhysicalityError : public Error {
 public:
  using Error::Error;
};

/// Post-selection with vanishing acceptance probability.
class PurificationFailure : public Error {
 public:
  using Error::Error;
};

/// Iteration did not settle within its budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Configuration text could not be parsed or failed validation.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace rydrep
