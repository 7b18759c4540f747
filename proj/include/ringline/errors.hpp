#pragma once

#include <stdexcept>
#include <string>

namespace ringline {

// Syntax or semantic error in a ring spec or data file; positions are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line_(line), col_(col) {}

    int line() const { return line_; }
    int column() const { return col_; }

private:
    int line_;
    int col_;
};

// A configured resource bound (ring order, orbit size, enumeration budget) was hit.
class CapError : public std::runtime_error {
public:
    explicit CapError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ringline
