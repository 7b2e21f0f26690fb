#pragma once

#include <stdexcept>
#include <string>

namespace ene {

/// Any failure of a library operation: domain violations, windows collapsing
/// to nothing, roots that leave the scalar field, iteration budgets.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax error with a 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " at line " + std::to_string(line) + ", column " +
                std::to_string(column)),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace ene
