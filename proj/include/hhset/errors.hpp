#pragma once

#include <stdexcept>
#include <string>

namespace hhset {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands use different set representations (or SupportSet grid sizes).
class RepresentationMismatch : public Error {
public:
    using Error::Error;
};

/// A set would be built with lo > hi, a negative radius, or a negative scaling.
class InvalidSet : public Error {
public:
    using Error::Error;
};

/// Pointwise products are only defined for intervals.
class UnsupportedProduct : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of a function or of a harmonic operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Family or checker parameters violate their preconditions.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Product integrands must stay inside (0, inf).
class PositivityError : public Error {
public:
    using Error::Error;
};

class QuadratureError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class EmptySearchSpace : public Error {
public:
    using Error::Error;
};

} // namespace hhset
