// Copyright 2026 The SNIP Solver Authors
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

#ifndef SNIP_ERRORS_H_
#define SNIP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace snip {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance document (syntax or shape).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed document whose data violates an instance invariant. The
// message starts with the offending field path, e.g. "arcs[3].q: ...".
class ValidationError : public Error {
 public:
  ValidationError(const std::string& field, const std::string& what)
      : Error(field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// extract_path on a node that cannot reach the destination.
class NoPathError : public Error {
 public:
  using Error::Error;
};

// Generator parameters for which the requested instance cannot be built.
class InfeasibleParamsError : public Error {
 public:
  using Error::Error;
};

// Brute-force enumeration guard tripped.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

// A cutting-plane loop exceeded its pass budget.
class IterationLimitError : public Error {
 public:
  using Error::Error;
};

// Lifted cut requested on a path with a zero interdicted probability.
class MixedQError : public Error {
 public:
  using Error::Error;
};

// q = 0 cut requested on a path with some positive interdicted probability.
class NotAllZeroError : public Error {
 public:
  using Error::Error;
};

// Internal LP failure (iteration limit, unrecoverable singular basis).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace snip

#endif  // SNIP_ERRORS_H_
