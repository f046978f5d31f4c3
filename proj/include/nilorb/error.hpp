#pragma once

#include <stdexcept>
#include <string>

namespace nilorb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad partition, unmarked vertex, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Arguments belong to different Lie types.
class TypeMismatch : public Error {
public:
    using Error::Error;
};

/// A brute-force enumeration would exceed its fixed size limit.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

namespace detail {

[[noreturn]] inline void fail_invariant(const std::string& what)
{
    throw InvariantViolation(what);
}

inline void check(bool ok, const std::string& what)
{
    if (!ok)
        throw InvalidArgument(what);
}

} // namespace detail

} // namespace nilorb
