#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace degstab {

enum class ErrorKind {
    InvalidVertex,
    InvalidInput,
    NumericFailure,
    PatternNotMinimal,
    PatternNotRigid,
    ParseError,
    DuplicateEdge,
    IndexOutOfRange,
    OracleTimeout,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Parse-family errors carry the 1-based line of the offending input.
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, std::size_t line, const std::string& reason);
    std::size_t line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

class NumericFailure : public Error {
public:
    NumericFailure(const std::string& what, double best_value);
    double best_value() const noexcept { return best_value_; }

private:
    double best_value_;
};

}  // namespace degstab
