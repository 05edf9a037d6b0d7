#ifndef CHLOD_ERRORS_HPP
#define CHLOD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chlod {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An evaluation point violates a domain precondition (outside an interval,
/// outside the planar region, at a degenerate fiber).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An index pair (m, k) or (k, j) is out of range.
class IndexError : public Error {
public:
    using Error::Error;
};

/// A constructed object fails its invariants (config field, curve separation,
/// sequence admissibility).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Runtime failure while evaluating an expression (division by zero, sqrt of
/// a negative, log of a nonpositive value).
class EvalError : public Error {
public:
    using Error::Error;
};

/// File read/write failure.
class IoError : public Error {
public:
    using Error::Error;
};

/// Syntax error while parsing an expression; `offset` is the byte position in
/// the source string.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace chlod

#endif
