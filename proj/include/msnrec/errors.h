// Copyright 2026 The msnrec Authors.
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

#ifndef MSNREC_ERRORS_H_
#define MSNREC_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace msnrec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A log or state violates a structural invariant (dangling reference,
// self-contact, out-of-range strength).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Unknown user or other missing key.
class LookupError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class VersionError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace msnrec

#endif  // MSNREC_ERRORS_H_
