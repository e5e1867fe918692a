// Copyright 2026 The fnl Authors
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

#ifndef FNL_ERRORS_H
#define FNL_ERRORS_H

#include <stdexcept>
#include <string>

namespace fnl {

/// Base for all library errors.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: wrong shape, not Hermitian, not normalized, ...
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// A configured cap (strategy count, Hilbert-space dimension) would be exceeded.
class ResourceError : public Error {
   public:
    using Error::Error;
};

/// The request is well-formed but outside what the library implements.
class UnsupportedError : public Error {
   public:
    using Error::Error;
};

/// A solver broke down (LP pivoting failure, singular normalization, ...).
class SolverError : public Error {
   public:
    using Error::Error;
};

}  // namespace fnl

#endif
