#pragma once

#include <stdexcept>
#include <string>

namespace ptawit {

// Error kinds raised by library operations. Parse diagnostics are collected
// separately (see parser.hpp); everything else throws.
enum class ErrorKind {
    UndefinedSum,             // (+inf) + (-inf)
    ClockMismatch,            // DBM operation on different clock sets
    NonCanonicalInput,        // zone_closure requires canonical inputs
    EmptyInput,               // operation requires a non-empty zone
    EmptySet,                 // canonical DBM of an empty union
    UnboundedConstant,        // model constant exceeds the clock bound K
    RegionUnsound,            // diagonal constraints with clocks not bounded by K
    InitialInvariantViolated, // zero valuation violates inv(l0)
    InvariantViolated,        // region_of on a valuation outside the invariant
    AssumptionViolated,       // proceed assumption fails
    DimensionMismatch,        // certificate dimensions do not match the system
    EmptySupport,             // induced subsystem from an empty region set
    Infeasible,               // threshold exceeds the optimal probability
    UnboundedInvariant,       // inv/vol minimization without a declared bound
    UnboundedZone,            // volume of a zone with bounds above K
    Internal,                 // invariant breach inside the library
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

} // namespace ptawit
