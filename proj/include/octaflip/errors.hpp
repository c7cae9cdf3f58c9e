#pragma once

#include <stdexcept>
#include <string>

namespace octaflip {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input that fails schema or value validation (bad rationals, malformed
/// scenes, shape mismatches between results).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Mixing elements from different semifield backends or generator counts.
class BackendMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Text that does not match the element grammar. `offset` is the byte
/// position of the first offending character.
class ParseError : public InvalidInput {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : InvalidInput(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Configuration or motion violating a genericity precondition.
class NotGeneric : public Error {
public:
    using Error::Error;
};

class SiteNotPresent : public Error {
public:
    using Error::Error;
};

class MissingRole : public Error {
public:
    using Error::Error;
};

/// Determinant touches zero without changing sign (tangential collinearity).
class DegenerateEvent : public NotGeneric {
public:
    using NotGeneric::NotGeneric;
};

/// Determinant of a triple vanishes identically on a trajectory segment.
class IdenticallyZero : public NotGeneric {
public:
    using NotGeneric::NotGeneric;
};

/// Collinearity exactly at a trajectory breakpoint or at t in {0,1}.
class EndpointEvent : public NotGeneric {
public:
    using NotGeneric::NotGeneric;
};

/// Two distinct triples collinear at the same instant.
class SimultaneousEvents : public NotGeneric {
public:
    using NotGeneric::NotGeneric;
};

/// The face-set change across an event is not a single triangle inversion.
class ObstructedTriangle : public NotGeneric {
public:
    using NotGeneric::NotGeneric;
};

/// Motion endpoints do not coincide as point sets.
class NotClosed : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// A symbolic relation that must hold failed to verify.
class RelationFailed : public Error {
public:
    RelationFailed(const std::string& identity, const std::string& lhs,
                   const std::string& rhs)
        : Error("relation '" + identity + "' failed: " + lhs + " != " + rhs),
          identity_(identity), lhs_(lhs), rhs_(rhs) {}
    const std::string& identity() const { return identity_; }
    const std::string& lhs() const { return lhs_; }
    const std::string& rhs() const { return rhs_; }

private:
    std::string identity_, lhs_, rhs_;
};

/// Internal consistency breach; indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace octaflip
