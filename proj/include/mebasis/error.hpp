// Copyright 2026 The mebasis Authors
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

namespace mebasis {

/// Failure categories shared by the C++ core and the C API status codes.
enum class ErrorCode {
    EmptyPattern,
    InvalidPattern,
    InvalidSign,
    OutOfRange,
    TooFewQubits,
    TooManyQubits,
    LabelLengthMismatch,
    QubitOutOfRange,
    WidthMismatch,
    SyntaxError,
    UnsupportedGate,
    RegisterMismatch,
    InvalidArgument,
};

const char *error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

/// Raised by the QASM parser; carries the 1-based line number of the offending statement.
class ParseError : public Error {
  public:
    ParseError(ErrorCode code, std::size_t line, const std::string &message)
        : Error(code, "line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

}  // namespace mebasis
