#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace zq2 {

namespace detail {
template <class... Ts>
std::string msg(Ts&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}
}  // namespace detail

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition violated (argument outside the operation's domain).
struct DomainError : Error {
    using Error::Error;
};

// Requested point lies outside a ladder table's coverage.
struct RangeError : Error {
    using Error::Error;
};

// A numeric routine could not reach its target tolerance.
struct ToleranceError : Error {
    using Error::Error;
};

// A denominator sits too close to a zeta zero for the result to mean anything.
struct IllConditionedError : Error {
    using Error::Error;
};

// Root bracketing failed where a crossing must exist; signals a corrupt table.
struct BracketError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// Cache/fixture file failed version or parameter validation.
struct FormatError : Error {
    using Error::Error;
};

}  // namespace zq2
