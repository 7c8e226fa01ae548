#pragma once

#include <stdexcept>
#include <string>

namespace trisect {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define TRISECT_DEFINE_ERROR(Name)            \
    class Name : public Error {               \
    public:                                   \
        using Error::Error;                   \
    }

TRISECT_DEFINE_ERROR(UnknownSymbol);
TRISECT_DEFINE_ERROR(InvalidRelation);
TRISECT_DEFINE_ERROR(ParityError);
TRISECT_DEFINE_ERROR(NotDecomposable);
TRISECT_DEFINE_ERROR(InvalidStep);
TRISECT_DEFINE_ERROR(ProfileMismatch);
TRISECT_DEFINE_ERROR(EmptyHistory);
TRISECT_DEFINE_ERROR(BudgetExceeded);
TRISECT_DEFINE_ERROR(UnknownSection);
TRISECT_DEFINE_ERROR(NonPrimeK);
TRISECT_DEFINE_ERROR(OutOfWindow);
TRISECT_DEFINE_ERROR(PreconditionFailed);
TRISECT_DEFINE_ERROR(SchemaError);

#undef TRISECT_DEFINE_ERROR

}  // namespace trisect
