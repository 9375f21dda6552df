#pragma once

#include <stdexcept>
#include <string>

namespace cw {

// Base class for every domain error raised by the library. The command-line
// front end maps these to exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

#define CW_DEFINE_ERROR(Name)                                            \
  class Name : public DomainError {                                      \
   public:                                                               \
    explicit Name(const std::string& what) : DomainError(#Name ": " + what) {} \
  };

CW_DEFINE_ERROR(InvalidInput)
CW_DEFINE_ERROR(IndexOutOfRange)
CW_DEFINE_ERROR(NotSkewSymmetrizable)
CW_DEFINE_ERROR(UnknownDiagram)
CW_DEFINE_ERROR(NonLaurentResult)
CW_DEFINE_ERROR(ArithmeticOverflow)
CW_DEFINE_ERROR(ZeroPolynomial)
CW_DEFINE_ERROR(NotBipartite)
CW_DEFINE_ERROR(IndefiniteType)
CW_DEFINE_ERROR(VariableAbsent)
CW_DEFINE_ERROR(NotFoundWithinBounds)
CW_DEFINE_ERROR(DegreeMismatch)
CW_DEFINE_ERROR(NotInvariant)
CW_DEFINE_ERROR(NotAdmissible)
CW_DEFINE_ERROR(NotAnOrbit)
CW_DEFINE_ERROR(UnknownTriple)
CW_DEFINE_ERROR(SyntaxError)
CW_DEFINE_ERROR(GeneratorOutOfRange)
CW_DEFINE_ERROR(Unsupported)
CW_DEFINE_ERROR(PatternMismatch)
CW_DEFINE_ERROR(LengthMismatch)
CW_DEFINE_ERROR(LevelUnused)
CW_DEFINE_ERROR(CyclesShareEdge)
CW_DEFINE_ERROR(NotMutableKind)
CW_DEFINE_ERROR(UnknownLabel)
CW_DEFINE_ERROR(BoundaryMismatch)
CW_DEFINE_ERROR(NotCatalogShape)
CW_DEFINE_ERROR(TranscriptionError)

#undef CW_DEFINE_ERROR

}  // namespace cw
