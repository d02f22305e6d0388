#pragma once

#include <stdexcept>
#include <string>

namespace entropy_kit {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define ENTROPY_KIT_ERROR(Name)                \
    class Name : public Error {                \
      public:                                  \
        using Error::Error;                    \
    }

ENTROPY_KIT_ERROR(NonHermitian);
ENTROPY_KIT_ERROR(NotPositive);
ENTROPY_KIT_ERROR(InvalidIndex);
ENTROPY_KIT_ERROR(DimMismatch);
ENTROPY_KIT_ERROR(DomainError);
ENTROPY_KIT_ERROR(OutOfValidity);
ENTROPY_KIT_ERROR(IncompleteMeasurement);
ENTROPY_KIT_ERROR(NotDiagonal);
ENTROPY_KIT_ERROR(PureState);
ENTROPY_KIT_ERROR(ParseError);

#undef ENTROPY_KIT_ERROR

}  // namespace entropy_kit
