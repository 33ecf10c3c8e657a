/* Copyright 2026 The refsyn Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <stdexcept>
#include <string>

namespace refsyn {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: ill-typed programs, mismatched vector lengths, bad grammars.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Unknown grammar family, unregistered function or arity mismatch.
class GrammarError : public StructuralError {
 public:
  using StructuralError::StructuralError;
};

// No accepted program exists (empty language, unreachable root).
class NoSolutionError : public Error {
 public:
  using Error::Error;
};

// A precondition the algorithms rely on was violated; indicates a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Wall-clock budget exhausted.
class TimeoutError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration would exceed its program-count cap.
class OracleInfeasibleError : public Error {
 public:
  using Error::Error;
};

// Problem or report files that cannot be read, parsed or written.
class FileError : public Error {
 public:
  using Error::Error;
};

}  // namespace refsyn
