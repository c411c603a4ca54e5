#pragma once

#include <stdexcept>
#include <string>

namespace skein {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different coefficient rings.
class RingMismatchError : public Error {
public:
    using Error::Error;
};

/// invert_unit called on a non-unit.
class NotAUnitError : public Error {
public:
    using Error::Error;
};

/// A generator is not part of the presentation alphabet.
class AlphabetError : public Error {
public:
    using Error::Error;
};

/// Rule set is not terminating, or a relation could not be oriented.
class PresentationError : public Error {
public:
    using Error::Error;
};

/// A morphism has no image for some generator, or fails to respect relations.
class MorphismError : public Error {
public:
    using Error::Error;
};

/// Internal consistency failure (an identity that must hold did not).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Syntax error in the expression language.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

}  // namespace skein
