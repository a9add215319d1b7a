// Copyright 2026 The Speq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPEQ_ERRORS_HPP
#define SPEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace speq {

// Base class for every error thrown by the library. The concrete subclass
// determines the status code reported across the C boundary and the exit
// code of the command-line tool.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad inputs: out-of-range parameters, invalid profiles, mismatched sizes.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Operation not defined for the given game kind (e.g. exhaustive
// enumeration of a continuous game).
class Unsupported : public Error {
 public:
  using Error::Error;
};

// A configurable resource cap was exceeded (e.g. the profile-enumeration
// cap of the exhaustive solvers).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// Malformed text input: scenario configs, reports, rationality strings.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Filesystem failure while reading or writing artifacts.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace speq

#endif  // SPEQ_ERRORS_HPP
