#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyptile {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two inputs that must be distinct coincide.
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// A point does not lie on the geodesic it was paired with.
class NotIncident : public Error {
public:
    using Error::Error;
};

class NoSuchTriangle : public Error {
public:
    using Error::Error;
};

class NoSuchPolygon : public Error {
public:
    using Error::Error;
};

/// The polygon's interior angle does not divide 2*pi.
class TilingMismatch : public Error {
public:
    using Error::Error;
};

class Collinear : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace hyptile
