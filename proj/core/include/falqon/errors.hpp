// Copyright 2026 The falqon-lab authors.
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

namespace falqon {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument, malformed input, or broken invariant on caller data.
class ParameterError : public Error {
  public:
    using Error::Error;
};

/// Problem size exceeds a documented capacity limit (state vectors,
/// dense eigensolves, brute-force enumeration).
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// Randomized construction exhausted its rejection budget.
class GenerationError : public Error {
  public:
    using Error::Error;
};

/// Numerical failure: non-finite intermediate values, failed line search.
class NumericalError : public Error {
  public:
    using Error::Error;
};

/// File or stream could not be read or written.
class IoError : public Error {
  public:
    using Error::Error;
};

} // namespace falqon
