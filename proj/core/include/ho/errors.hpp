#pragma once

#include <stdexcept>
#include <string>

namespace ho {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input specification (JSON grammar, field values).
class ParseError : public Error {
public:
    using Error::Error;
};

/// An operation's documented precondition or a theorem hypothesis does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Argument outside the region where a function is defined
/// (table hull, aliasing limit, zero outside the disk).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Root bracket could not be established, iteration failed to converge,
/// or a quantity overflowed.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Process exit codes used by the command-line tool.
enum class ExitCode : int {
    ok = 0,
    parse = 2,
    precondition = 3,
    numerical = 4,
    internal = 5,
};

/// Maps the currently handled exception to an exit code.
ExitCode exit_code_for_current_exception() noexcept;

}  // namespace ho
