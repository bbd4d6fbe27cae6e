#ifndef HEFDIV_ERRORS_HPP
#define HEFDIV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hefdiv {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested homogenization degree below the actual degree.
struct DegreeCapError : Error { using Error::Error; };

// Adding terms whose stored powers of 2*pi*i disagree.
struct TauMismatchError : Error { using Error::Error; };

// delta_{zeta-z} precondition failed on a form of degree >= 1.
struct NotClosedError : Error { using Error::Error; };

// The degree-constrained linear system has no solution. Unreachable for
// delta-closed inputs; reaching it means a degree-bookkeeping bug.
struct InfeasibleError : Error { using Error::Error; };

// f_k o f_{k+1} != 0 after construction. Indicates an internal sign bug.
struct ComplexInvariantError : Error { using Error::Error; };

// Probabilistic rank test failed at every sample point.
struct GenericSurjectivityError : Error { using Error::Error; };

// Degree-bound method not applicable to the query (e.g. macaulay with r > 1).
struct ApplicabilityError : Error { using Error::Error; };

// Quadrature error estimate exceeds the requested tolerance.
struct ToleranceNotReached : Error { using Error::Error; };

// p lost full rank somewhere on the integration grid (Z not empty).
struct RankDropOnGrid : Error { using Error::Error; };

// Bad CLI arguments or unreadable input.
struct UsageError : Error { using Error::Error; };

} // namespace hefdiv

#endif
