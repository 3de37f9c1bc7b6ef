#pragma once

#include <stdexcept>
#include <string>

namespace hyprv {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ReducibleError : Error {
    using Error::Error;
};
struct BadDimensionError : Error {
    using Error::Error;
};
struct BadLetterError : Error {
    using Error::Error;
};
struct BadParityError : Error {
    using Error::Error;
};
struct NotInClassError : Error {
    using Error::Error;
};
struct WordTooLongError : Error {
    using Error::Error;
};
struct MalformedPathError : Error {
    using Error::Error;
};
struct IncompatibleStepError : Error {
    using Error::Error;
};
struct NotALoopError : Error {
    using Error::Error;
};
struct ZeroVectorError : Error {
    using Error::Error;
};
struct NotInOrbitError : Error {
    using Error::Error;
};
struct NotInGPrimeError : Error {
    using Error::Error;
};
struct NotBlockFormError : Error {
    using Error::Error;
};
struct NotUnimodularError : Error {
    using Error::Error;
};
struct DivisionByZeroError : Error {
    using Error::Error;
};
struct SingularMatrixError : Error {
    using Error::Error;
};

}  // namespace hyprv
