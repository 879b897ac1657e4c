// Copyright 2026 The ipcut Authors.
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

#ifndef IPCUT_ERRORS_H_
#define IPCUT_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ipcut {

// Base class of every error raised by the library. Each subclass maps to a
// distinct CLI exit code (see ExitCodeFor in harness.h).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input line. line() is 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int64_t line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int64_t line() const { return line_; }

 private:
  int64_t line_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

// A subset or seed set outside the admissible domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Ratio requested for an empty subset.
class UndefinedRatioError : public Error {
 public:
  using Error::Error;
};

// The problem has no meaningful optimum (e.g. an edgeless graph).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// A capacity, cut value or ratio does not fit the integer budget.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Caller broke an API precondition (non-monotone update, unsorted list...).
class ContractError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration refused because the instance is too large.
class GuardError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid auxiliary file (partition, manifest, seed list).
class FormatError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ipcut

#endif  // IPCUT_ERRORS_H_
