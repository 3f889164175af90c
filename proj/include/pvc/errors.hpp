#pragma once

#include <stdexcept>
#include <string>

namespace pvc {

/// A numeric argument is outside the operation's domain (n = 0, length 0, ...).
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Structurally malformed input (cyclic "tree", colour out of range, unmarked subdivision, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A closed-form evaluation outside its range of validity.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An invariant that a proven statement guarantees has been observed broken.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Input text could not be parsed.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace pvc
