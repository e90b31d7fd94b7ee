#ifndef BMETRIC_ERRORS_HPP
#define BMETRIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bmetric {

struct EmptySetError : std::invalid_argument {
    EmptySetError() : std::invalid_argument("EmptySet: set argument must be nonempty") {}
};

struct NotStrongBError : std::invalid_argument {
    explicit NotStrongBError(const std::string& k)
        : std::invalid_argument("NotStrongB: space is not a strong b-metric space with K = " + k) {}
};

struct InvalidKError : std::invalid_argument {
    explicit InvalidKError(const std::string& k)
        : std::invalid_argument("InvalidK: k = " + k + " is not in [0,1)") {}
};

struct InvalidRadiusError : std::invalid_argument {
    explicit InvalidRadiusError(const std::string& r)
        : std::invalid_argument("InvalidRadius: r = " + r + " must be positive") {}
};

struct NotSingleValuedError : std::invalid_argument {
    explicit NotSingleValuedError(int point)
        : std::invalid_argument("NotSingleValued: target of point " + std::to_string(point) +
                                " is not a singleton") {}
};

struct MixedSpacesError : std::invalid_argument {
    MixedSpacesError()
        : std::invalid_argument("MixedSpaces: completion points come from different presentations") {}
};

struct BadModulusError : std::runtime_error {
    explicit BadModulusError(const std::string& detail)
        : std::runtime_error("BadModulus: " + detail) {}
};

struct NotEquivalentInputsError : std::runtime_error {
    explicit NotEquivalentInputsError(const std::string& detail)
        : std::runtime_error("NotEquivalentInputs: " + detail) {}
};

}  // namespace bmetric

#endif
