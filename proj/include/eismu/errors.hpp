#pragma once

#include <stdexcept>
#include <string>

namespace eismu {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define EISMU_ERROR(Name)                                   \
    struct Name : Error {                                   \
        explicit Name(const std::string& msg = #Name)       \
            : Error(msg) {}                                 \
    }

EISMU_ERROR(LevelMismatch);
EISMU_ERROR(DivisionByZero);
EISMU_ERROR(NotDivisible);
EISMU_ERROR(ZeroIndex);
EISMU_ERROR(UnsupportedWeightDepth);
EISMU_ERROR(DegreeOverflow);
EISMU_ERROR(SingularMatrix);
EISMU_ERROR(IndexOverflow);
EISMU_ERROR(InsufficientPrecision);
EISMU_ERROR(InconsistentSystem);
EISMU_ERROR(DepthNonzero);
EISMU_ERROR(RelationViolation);
EISMU_ERROR(IOFailure);

#undef EISMU_ERROR

} // namespace eismu
