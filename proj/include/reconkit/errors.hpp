#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace reconkit {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `offset` is the byte position of the problem.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// An argument outside the documented domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Sizes the library deliberately does not handle (e.g. n > 62 in graph6).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// An exact counter exceeded its fixed-width range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// An N-matrix or edge labelled poset that cannot belong to any graph.
/// A failed exact division during reconstruction raises this.
class InvalidMatrixError : public Error {
public:
    using Error::Error;
};

/// A vertex deck or polynomial deck that cannot belong to any graph.
class InconsistentDeckError : public Error {
public:
    using Error::Error;
};

/// The requested invariant is not computable from the given data.
class NotReconstructibleError : public Error {
public:
    NotReconstructibleError(std::string reason, const std::string& what)
        : Error(what), reason_(std::move(reason)) {}

    /// Machine readable reason code, e.g. "no-degree-one-vertex".
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string reason_;
};

}  // namespace reconkit
