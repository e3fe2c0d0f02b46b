#ifndef LEXCYCLE_ERROR_HPP
#define LEXCYCLE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lexcycle {

/// Broad failure category. The CLI maps each kind to its own exit code.
enum class ErrorKind {
    invalid_argument,
    parse,
    validation,
    guard,
    verification,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Malformed input text. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(ErrorKind::parse,
                line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Input is well-formed but violates a mathematical precondition.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what)
        : Error(ErrorKind::validation, what) {}
};

/// Brute-force routines refuse instances above their size limits.
class GuardError : public Error {
public:
    explicit GuardError(const std::string& what) : Error(ErrorKind::guard, what) {}
};

class VerificationError : public Error {
public:
    explicit VerificationError(const std::string& what)
        : Error(ErrorKind::verification, what) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what)
        : Error(ErrorKind::invalid_argument, what) {}
};

} // namespace lexcycle

#endif // LEXCYCLE_ERROR_HPP
