#ifndef QALG_ERROR_HPP
#define QALG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qalg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two paths whose endpoints do not match were composed.
class CompositionError : public Error {
public:
    using Error::Error;
};

/// An operation that needs a closed path got an open one.
class NotClosedError : public Error {
public:
    using Error::Error;
};

/// A vertex or arrow name that the quiver does not declare.
class UnknownNameError : public Error {
public:
    using Error::Error;
};

/// The input violates the precondition of an operation (e.g. asking for the
/// Hochschild presentation of an algebra that is not stacked).
class PreconditionError : public Error {
public:
    PreconditionError(std::string code, const std::string& what)
        : Error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// A computed object failed a cross-check that must hold by construction.
class InternalConsistencyError : public Error {
public:
    InternalConsistencyError(std::string code, const std::string& what)
        : Error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

}  // namespace qalg

#endif
