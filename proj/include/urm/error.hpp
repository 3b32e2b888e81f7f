#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace urm {

class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated.
class precondition_error : public error
{
public:
    using error::error;
};

/// Input exceeds a hard size cap (graph order, enumeration range, ...).
class size_cap_error : public error
{
public:
    using error::error;
};

/// A search ran out of its node or time budget before reaching an answer.
class budget_exhausted : public error
{
public:
    using error::error;
};

class invalid_matching : public precondition_error
{
public:
    using precondition_error::precondition_error;
};

class parse_error : public error
{
public:
    parse_error(const std::string & message, std::size_t line, std::size_t column) :
        error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column)
    {
    }

    auto line() const -> std::size_t { return line_; }
    auto column() const -> std::size_t { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace urm
