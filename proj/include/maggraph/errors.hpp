#pragma once

#include <stdexcept>
#include <string>

namespace maggraph {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph document.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Well-formed document that violates a graph invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A theorem hypothesis (connectivity, balance, ...) does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An exhaustive search would exceed its configured budget.
class SizeError : public Error {
public:
    using Error::Error;
};

/// Dimension parameter n outside (1, inf].
class DimensionError : public Error {
public:
    using Error::Error;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

class EmptySubsetError : public Error {
public:
    using Error::Error;
};

}  // namespace maggraph
