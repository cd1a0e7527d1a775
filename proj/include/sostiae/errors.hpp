#pragma once

#include <stdexcept>
#include <string>

namespace sostiae {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input outside the mathematical domain of an operation (e.g. PO outside (0,100)).
struct DomainError : Error {
    using Error::Error;
};

// Closed loop would require a pure differentiator (improper loop gain at feedback).
struct ImproperClosedLoop : Error {
    using Error::Error;
};

// Root finding requested on a constant polynomial.
struct DegreeZero : Error {
    using Error::Error;
};

// DC gain 0/0: an uncancelled integrator pair, caller must simplify.
struct IndeterminateGain : Error {
    using Error::Error;
};

// Two traces compared on different time grids.
struct GridMismatch : Error {
    using Error::Error;
};

// Supplied trajectory does not span the requested grid.
struct CoverageError : Error {
    using Error::Error;
};

}  // namespace sostiae
