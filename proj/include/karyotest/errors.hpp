// errors.hpp -- shared error type for the karyotype toolkit

#pragma once

#include <stdexcept>
#include <string>

namespace karyotest {

enum class ErrorCode {
    DuplicateBand,
    ArmMismatch,
    KindClash,
    InvalidName,
    UnknownEntity,
    FormatError,
    ValueError,
    ParseError,
    UnsupportedPloidy,
    TierViolation,
};

const char* to_string(ErrorCode code);

/// Thrown by toolkit operations. `code` identifies the failure class;
/// `line`, `row` and `column` locate it in file-backed inputs when known
/// (-1 otherwise).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message),
          code_(code) {}

    Error(ErrorCode code, const std::string& message, int line, int column = -1)
        : std::runtime_error(std::string(to_string(code)) + ": " + message),
          code_(code), line_(line), column_(column) {}

    ErrorCode code() const noexcept { return code_; }
    int line() const noexcept { return line_; }
    int row() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    ErrorCode code_;
    int line_ = -1;
    int column_ = -1;
};

}  // namespace karyotest
