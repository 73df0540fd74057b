#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prg {

/// Base class for all errors raised by the toolkit.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct OrderMismatch : Error {
    OrderMismatch(unsigned lhs, unsigned rhs)
        : Error("field order mismatch: " + std::to_string(lhs) + " vs " +
                std::to_string(rhs) + " (embed into a common field first)") {}
};

struct NotASubfield : Error {
    NotASubfield(unsigned n, unsigned m)
        : Error("Q(w_" + std::to_string(n) + ") is not a subfield of Q(w_" +
                std::to_string(m) + "): " + std::to_string(n) + " does not divide " +
                std::to_string(m)) {}
};

struct UnsupportedField : Error {
    using Error::Error;
};

struct NotInSigmaPM : Error {
    using Error::Error;
};

struct BadAxes : Error {
    using Error::Error;
};

struct InfiniteGroup : Error {
    using Error::Error;
};

struct NotAMember : Error {
    using Error::Error;
};

struct NotApplicable : Error {
    using Error::Error;
};

struct NotReducible : Error {
    using Error::Error;
};

struct DegreeMismatch : Error {
    DegreeMismatch(unsigned k, unsigned l)
        : Error("groups have different degrees " + std::to_string(k) + " and " +
                std::to_string(l) + "; equality is decided per degree only") {}
};

struct NoPositiveRelation : Error {
    using Error::Error;
};

/// Raised by the CLI front end; carries the offset of the offending character.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace prg
