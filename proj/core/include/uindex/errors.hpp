#pragma once

#include <stdexcept>
#include <string>

namespace uindex {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An input record violates a data invariant (empty author list, duplicate id, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A text stream could not be decoded into records. Messages carry
/// source name and line/row number.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A referenced paper or author key does not exist in the corpus.
class LookupError : public Error {
public:
    using Error::Error;
};

/// A numeric argument is outside the formula's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Reading or writing a file failed.
class IoError : public Error {
public:
    using Error::Error;
};

/// An HTTP request failed after all retries.
class FetchError : public Error {
public:
    using Error::Error;
};

/// A response body could not be decoded.
class DecodeError : public Error {
public:
    using Error::Error;
};

/// The remote service has no data for the requested identifier.
class NotFoundError : public Error {
public:
    using Error::Error;
};

} // namespace uindex
