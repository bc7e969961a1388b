#pragma once

#include <stdexcept>
#include <string>

namespace twklv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TWKLV_ERROR(Name)                   \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

TWKLV_ERROR(NotDivisible);
TWKLV_ERROR(Overflow);
TWKLV_ERROR(ParseError);

TWKLV_ERROR(NotFiniteType);
TWKLV_ERROR(InvalidSigma);
TWKLV_ERROR(UnsupportedOrbit);
TWKLV_ERROR(GroupTooLarge);

TWKLV_ERROR(UnknownName);
TWKLV_ERROR(DatumFormatError);
TWKLV_ERROR(MissingStatus);
TWKLV_ERROR(DanglingReference);

TWKLV_ERROR(Underdetermined);
TWKLV_ERROR(InconsistentDatum);
TWKLV_ERROR(NotSelfDualConsistent);

TWKLV_ERROR(InterpolationMismatch);
TWKLV_ERROR(UnclassifiableColumn);
TWKLV_ERROR(UnsupportedQ);

#undef TWKLV_ERROR

}  // namespace twklv
