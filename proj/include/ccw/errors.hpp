#ifndef CCW_ERRORS_HPP
#define CCW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ccw {

// Base class for all failures raised by the workbench.  Every subclass names
// one specific contract violation so callers (and the CLI's exit-code
// mapping) can react without string matching.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input errors ---------------------------------------------------------------

// A rank vector is not a contiguous relabeling 0..m-1 of its distinct values.
struct MalformedRanks : Error {
    explicit MalformedRanks(const std::string& what) : Error(what) {}
};

// Text input could not be parsed; carries the character offset of the
// first offending position.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at offset " + std::to_string(offset) + ")"),
          offset(offset) {}
    std::size_t offset;
};

// A tuple-length/enumeration request beyond the supported range (t > 6).
struct SizeLimit : Error {
    explicit SizeLimit(const std::string& what) : Error(what) {}
};

// Geometric/combinatorial preconditions ---------------------------------------

// Two of the four points of a chord-crossing query coincide.
struct DegeneratePoints : Error {
    explicit DegeneratePoints(const std::string& what) : Error(what) {}
};

// Decomposition-engine contract violations ------------------------------------

// Two qualifying index choices in a point-insertion formula disagree.
struct WellDefinednessViolation : Error {
    explicit WellDefinednessViolation(const std::string& what) : Error(what) {}
};

// Two single-insertion values that must agree (stage-3 averaging) differ.
struct ClaimViolation : Error {
    explicit ClaimViolation(const std::string& what) : Error(what) {}
};

// The input 4-cocycle has a nonzero lambda functional, so no coboundary
// decomposition exists.
struct PreconditionLambda : Error {
    explicit PreconditionLambda(const std::string& what) : Error(what) {}
};

// The input of the decomposition engine is not a cocycle.
struct NotACocycle : Error {
    explicit NotACocycle(const std::string& what) : Error(what) {}
};

// Certificate machinery -------------------------------------------------------

// A certificate's internal cross-check failed (implementation bug or
// deliberately corrupted input).
struct CertificateFailure : Error {
    explicit CertificateFailure(const std::string& what) : Error(what) {}
};

// Hyperbolic machinery --------------------------------------------------------

// The surface-group construction missed its residual tolerance.
struct ConstructionFailure : Error {
    explicit ConstructionFailure(const std::string& what) : Error(what) {}
};

// Two computed boundary angles fall in the ambiguity band between the
// coincidence tolerance and the separation tolerance; rank assignment would
// be a guess, so we abort instead.
struct NearCoincidence : Error {
    explicit NearCoincidence(const std::string& what) : Error(what) {}
};

// Optional features -----------------------------------------------------------

// The exact LP solver was disabled at configure time.
struct SolverNotBuilt : Error {
    explicit SolverNotBuilt(const std::string& what) : Error(what) {}
};

}  // namespace ccw

#endif  // CCW_ERRORS_HPP
