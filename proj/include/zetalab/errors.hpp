#pragma once
// Typed error conditions thrown by the library.  Each failure mode callers
// are expected to distinguish gets its own type so tests can assert on it.

#include <stdexcept>
#include <string>

namespace zetalab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define ZETALAB_DEFINE_ERROR(Name)                                  \
    struct Name : Error {                                           \
        explicit Name(const std::string& msg = #Name) : Error(msg) {} \
    }

// evaluation engine
ZETALAB_DEFINE_ERROR(PoleAtOne);
ZETALAB_DEFINE_ERROR(PrecisionUnreachable);
ZETALAB_DEFINE_ERROR(NearSingularity);
ZETALAB_DEFINE_ERROR(OverflowRisk);
ZETALAB_DEFINE_ERROR(PoleAtNonpositiveInteger);
ZETALAB_DEFINE_ERROR(UnsupportedRange);

// zero catalog
ZETALAB_DEFINE_ERROR(MissedZeroSuspected);
ZETALAB_DEFINE_ERROR(InvalidWindow);
ZETALAB_DEFINE_ERROR(NonMonotonic);
ZETALAB_DEFINE_ERROR(BadMagic);
ZETALAB_DEFINE_ERROR(TruncatedFile);

// arithmetic / characters
ZETALAB_DEFINE_ERROR(OutOfRange);
ZETALAB_DEFINE_ERROR(NotPrime);
ZETALAB_DEFINE_ERROR(NotCoprime);
ZETALAB_DEFINE_ERROR(TooLarge);

// quadrature / contour
ZETALAB_DEFINE_ERROR(SingularityTooClose);
ZETALAB_DEFINE_ERROR(MaxEvalExceeded);
ZETALAB_DEFINE_ERROR(OscillationTooFast);
ZETALAB_DEFINE_ERROR(InvalidShift);
ZETALAB_DEFINE_ERROR(DegenerateShifts);

// correlation sums
ZETALAB_DEFINE_ERROR(NoPairFound);
ZETALAB_DEFINE_ERROR(CatalogGap);

// lemma suite
ZETALAB_DEFINE_ERROR(PreconditionViolated);
ZETALAB_DEFINE_ERROR(BadConstants);

// import / parsing: carries the 1-based line number of the offending line.
struct ParseError : Error {
    long line;
    explicit ParseError(long line_, const std::string& msg = "ParseError")
        : Error(msg + " at line " + std::to_string(line_)), line(line_) {}
};

#undef ZETALAB_DEFINE_ERROR

}  // namespace zetalab
