#pragma once

#include <stdexcept>
#include <string>

namespace cuspcheck {

/// Base class for every domain error raised by the library. Input-level
/// problems (bad documents, invalid parameters, geometric preconditions)
/// derive from this; broken internal invariants derive from InvariantError.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define CUSPCHECK_DEFINE_ERROR(Name) \
  class Name : public Error {        \
   public:                           \
    using Error::Error;              \
  };

CUSPCHECK_DEFINE_ERROR(ParseError)
CUSPCHECK_DEFINE_ERROR(DimensionMismatch)
CUSPCHECK_DEFINE_ERROR(NotPrimitive)
CUSPCHECK_DEFINE_ERROR(UnboundedPolytope)
CUSPCHECK_DEFINE_ERROR(EmptyPolytope)
CUSPCHECK_DEFINE_ERROR(DegeneratePolytope)
CUSPCHECK_DEFINE_ERROR(RedundantFacet)
CUSPCHECK_DEFINE_ERROR(DegenerateFacet)
CUSPCHECK_DEFINE_ERROR(NotUnimodular)
CUSPCHECK_DEFINE_ERROR(UnknownFacet)
CUSPCHECK_DEFINE_ERROR(UnsupportedDegree)
CUSPCHECK_DEFINE_ERROR(SingularGram)
CUSPCHECK_DEFINE_ERROR(NotAVertex)
CUSPCHECK_DEFINE_ERROR(NonSmoothVertex)
CUSPCHECK_DEFINE_ERROR(ChopTooDeep)
CUSPCHECK_DEFINE_ERROR(InteractingChops)
CUSPCHECK_DEFINE_ERROR(MissingEvaluationData)
CUSPCHECK_DEFINE_ERROR(EmptySpectrum)
CUSPCHECK_DEFINE_ERROR(InvalidArgument)

#undef CUSPCHECK_DEFINE_ERROR

}  // namespace cuspcheck
