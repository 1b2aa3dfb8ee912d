#pragma once

#include <stdexcept>
#include <string>

namespace bicross {

// Exit-code mapping lives in the CLI; the library only classifies.
enum class ErrorKind {
    InvalidInput,          // malformed or semantically invalid configuration / arguments
    DivisionByZero,
    InternalInconsistency, // a postcondition that theory guarantees failed
    NonUnitary,            // *-structure requested on non-unitary cocycle data
    ProviderUnavailable,   // group beyond the built-in character provider bound
    BallTooSmall,          // an orbit needed by a computation lies outside the requested ball
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& what) : Error(ErrorKind::InvalidInput, what) {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error(ErrorKind::DivisionByZero, "division by zero") {}
};

class InternalInconsistency : public Error {
public:
    explicit InternalInconsistency(const std::string& what)
        : Error(ErrorKind::InternalInconsistency, what) {}
};

class NonUnitary : public Error {
public:
    explicit NonUnitary(const std::string& what) : Error(ErrorKind::NonUnitary, what) {}
};

class ProviderUnavailable : public Error {
public:
    explicit ProviderUnavailable(const std::string& what)
        : Error(ErrorKind::ProviderUnavailable, what) {}
};

class BallTooSmall : public Error {
public:
    explicit BallTooSmall(const std::string& what) : Error(ErrorKind::BallTooSmall, what) {}
};

} // namespace bicross
