#ifndef ENTPS_COMMON_HPP
#define ENTPS_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace entps {

using complexd = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

// Error hierarchy. Every failure mode carries a human-readable message;
// the distinct types let callers (and tests) discriminate without string
// matching.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConstraintViolation : Error {
    using Error::Error;
};
struct SignViolation : Error {
    using Error::Error;
};
struct NonFinite : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct CutoffTooSmall : Error {
    using Error::Error;
};
struct CutoffMismatch : Error {
    using Error::Error;
};
struct Overflow : Error {
    using Error::Error;
};
struct SeriesOverflow : Error {
    using Error::Error;
};
struct NotNormalizable : Error {
    using Error::Error;
};
struct NonFiniteSample : Error {
    using Error::Error;
};
struct StepTooLarge : Error {
    using Error::Error;
};

}  // namespace entps

#endif
