#ifndef ZDGA_ERRORS_HPP
#define ZDGA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zdga {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ring constructor got an order outside the valid range.
class InvalidOrderError : public Error {
public:
    using Error::Error;
};

/// GF() argument is not a prime (or prime power where required).
class InvalidCharacteristicError : public Error {
public:
    using Error::Error;
};

/// Quotient modulus polynomial is not monic or has too small a degree.
class InvalidModulusError : public Error {
public:
    using Error::Error;
};

/// A constructed ring would exceed the configured order cap.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// Element or vertex index out of range, or bitset width mismatch.
class IndexError : public Error {
public:
    using Error::Error;
};

/// An alliance predicate was asked about the empty set.
class EmptySetError : public Error {
public:
    using Error::Error;
};

/// Operation requires at least one vertex.
class EmptyGraphError : public Error {
public:
    using Error::Error;
};

/// Diameter requested on a disconnected graph.
class DisconnectedGraphError : public Error {
public:
    using Error::Error;
};

/// A known-partition construction was requested for a case the theorem
/// marks as not partitionable.
class NotApplicableError : public Error {
public:
    using Error::Error;
};

/// A certificate or cross-check failed re-verification.
class VerificationError : public Error {
public:
    using Error::Error;
};

/// Ring-spec syntax or validation error, with the offending position.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace zdga

#endif
