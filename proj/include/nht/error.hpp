#pragma once

#include <stdexcept>
#include <string>

namespace nht {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidGenerator : Error { using Error::Error; };
struct InvalidModulus : Error { using Error::Error; };
struct NonInvertible : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };
struct ConventionError : Error { using Error::Error; };
struct Unsupported : Error { using Error::Error; };
struct InvalidInput : Error { using Error::Error; };

struct ParseError : Error {
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    /// 1-based line of the offending input, 0 when the error is not tied to a line.
    std::size_t line() const noexcept { return line_; }

    /// Same error with `context` (typically a file name) prepended to the message.
    ParseError with_context(const std::string& context) const {
        return ParseError(context + ": " + what(), line_);
    }

private:
    ParseError(const std::string& full, std::size_t line) : Error(full), line_(line) {}

    std::size_t line_;
};

}  // namespace nht
