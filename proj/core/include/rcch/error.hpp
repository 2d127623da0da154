// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace rcch {

enum class ErrorKind {
    DimensionMismatch,
    WidthTooLarge,
    ParseError,
    IndexOutOfRange,
    NotOrthogonal,
    EntriesNotInRing,
    InternalProgressFailure,
    OddParity,
    NotInGroup,
    OutOfRange,
    NoSingleFlip,
    UnsupportedGate,
    IndicesNotDistinct,
    DimensionNotPowerOfTwo,
    ContainsH,
    TooManyH,
    PreconditionViolated,
    BadAlphabet,
    DimensionTooSmall,
    FormMismatch,
    TransportInvariantViolated,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

// Parse failures carry a 1-based line and column.
class ParseError : public Error {
  public:
    ParseError(int line, int column, const std::string& what)
        : Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

}  // namespace rcch
