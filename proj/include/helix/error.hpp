// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace helix {

enum class ErrorCode {
    DivisionByZero,
    ShapeError,
    EmptyInput,
    BadArgument,
    NotInAlphabet,
    BudgetExceeded,
    GuardViolated,
    ParseError,
    IoError,
};

const char* to_string(ErrorCode code) noexcept;

/// Library-wide exception. Every failure the core raises carries one of the
/// error codes above so the C API can map it onto a status value.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace helix
