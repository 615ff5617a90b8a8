#ifndef VFRAC_ERRORS_HPP
#define VFRAC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vfrac {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation
// (t <= 0 for the derivative, invalid ML parameters, ln of a
// non-positive number, ...).
struct DomainError : Error {
    using Error::Error;
};

// Gamma evaluated at a non-positive integer.
struct PoleError : DomainError {
    using DomainError::DomainError;
};

// A quantity left the representable range of double.
struct OverflowError : Error {
    using Error::Error;
};

// A series or adaptive scheme ran out of its iteration budget
// before meeting its tolerance (k_max terms, subdivision depth).
struct ConvergenceError : Error {
    using Error::Error;
};

// Richardson extrapolation saw monotonically growing corrections.
struct DivergenceError : Error {
    using Error::Error;
};

// Root bracketing failed: same sign at both ends and no sign
// change found by the grid pre-scan.
struct NoBracketError : Error {
    using Error::Error;
};

// A FnSpec without an attached derivative was asked for one.
struct MissingDerivativeError : Error {
    using Error::Error;
};

// A theorem was exercised on inputs that violate its hypotheses
// (Rolle with f(a) != f(b), a zero-crossing weight function, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// Expression text failed to parse. `position` is the 0-based
// offset into the source string where the problem was detected.
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

struct UnknownIdentifierError : SyntaxError {
    using SyntaxError::SyntaxError;
};

} // namespace vfrac

#endif
