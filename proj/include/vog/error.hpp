#pragma once

#include <stdexcept>
#include <string>

namespace vog {

// Base class for all recoverable errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (edge lists, candidate files, model files).
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Violated precondition or domain invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace vog
