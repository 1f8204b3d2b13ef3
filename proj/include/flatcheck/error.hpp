#ifndef FLATCHECK_ERROR_HPP
#define FLATCHECK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace flatcheck {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation ran past its configured resource budget. Never a wrong
// answer: callers either enlarge the budget or report the failure.
struct BudgetError : Error {
    explicit BudgetError(const std::string& what_ran_out)
        : Error("budget exceeded: " + what_ran_out) {}
};

struct RingMismatchError : Error {
    explicit RingMismatchError(const std::string& msg) : Error("ring mismatch: " + msg) {}
};

struct DivisionByZeroError : Error {
    DivisionByZeroError() : Error("division by zero") {}
};

struct UnsupportedError : Error {
    explicit UnsupportedError(const std::string& msg) : Error("unsupported: " + msg) {}
};

struct ParseError : Error {
    ParseError(const std::string& msg, int column)
        : Error("parse error at column " + std::to_string(column) + ": " + msg), col(column) {}
    int col;
};

}  // namespace flatcheck

#endif
