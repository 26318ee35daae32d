#pragma once

#include <stdexcept>
#include <string>

namespace linepin {

// violated preconditions; the CLI maps these to exit code 3
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept = 0;
};

#define LINEPIN_ERROR(Name)                                                  \
    struct Name : PreconditionError {                                        \
        explicit Name(const std::string& m = #Name) : PreconditionError(m) {} \
        const char* kind() const noexcept override { return #Name; }         \
    };

LINEPIN_ERROR(DegenerateDirection)
LINEPIN_ERROR(DimensionMismatch)
LINEPIN_ERROR(NotContaining)
LINEPIN_ERROR(EmptyFamily)
LINEPIN_ERROR(NotAPinning)
LINEPIN_ERROR(NotSurrounding)
LINEPIN_ERROR(NotAFlat)
LINEPIN_ERROR(PreconditionViolated)
LINEPIN_ERROR(WrongArity)
LINEPIN_ERROR(NotContainingOrigin)
LINEPIN_ERROR(NotMinimallySurrounding)
LINEPIN_ERROR(NotOrthogonal)
LINEPIN_ERROR(NotAMinimalOrthoPinning)
LINEPIN_ERROR(NotTangent)
LINEPIN_ERROR(CoplanarFacetExcluded)
LINEPIN_ERROR(UnsupportedLabel)
LINEPIN_ERROR(GenericityFailure)
LINEPIN_ERROR(DegenerateTriple)
LINEPIN_ERROR(DegeneratePolytope)

#undef LINEPIN_ERROR

// a size bound that should hold by construction did not
struct BoundViolation : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace linepin
