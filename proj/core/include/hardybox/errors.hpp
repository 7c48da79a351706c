// Copyright 2026 hardybox contributors
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

namespace hardybox {

/// Base class for every domain error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Convex weights are negative, duplicated, or do not sum to one.
class InvalidWeights : public Error {
 public:
  using Error::Error;
};

/// A box cannot be written in the five-local-plus-one-nonlocal vertex form.
class NotHardyForm : public Error {
 public:
  using Error::Error;
};

/// The locality feasibility solve exceeded its iteration cap.
class LpNotConverged : public Error {
 public:
  using Error::Error;
};

/// A requested solution family contains no valid member.
class EmptyFamily : public Error {
 public:
  using Error::Error;
};

/// An input violates a documented precondition of the operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A serialized document is malformed or fails schema validation.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hardybox
