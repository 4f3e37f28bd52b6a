#pragma once

#include <stdexcept>
#include <string>

namespace gbent {

// Base class for all contract violations raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// gf2m
struct DegreeMismatch : Error {
    using Error::Error;
};
struct BadModulus : Error {
    using Error::Error;
};

// cyclotomic
struct ExponentMismatch : Error {
    using Error::Error;
};
struct ArithmeticOverflow : Error {
    using Error::Error;
};
struct NotRational : Error {
    using Error::Error;
};

// space / io
struct DimensionError : Error {
    using Error::Error;
};
struct FormatError : Error {
    using Error::Error;
};

// gbfunc
struct NotGbent : Error {
    using Error::Error;
};
struct RegularityViolation : Error {
    using Error::Error;
};
struct OddDimension : Error {
    using Error::Error;
};
struct FormMismatch : Error {
    using Error::Error;
};

// constructions
struct ConditionViolated : Error {
    using Error::Error;
};
struct HypothesisViolated : Error {
    using Error::Error;
};
struct BadParameters : Error {
    using Error::Error;
};
struct ZeroValueOnSpread : Error {
    using Error::Error;
};
struct IncompleteSpread : Error {
    using Error::Error;
};

// vectorial
struct ZeroCoefficientVector : Error {
    using Error::Error;
};
struct NotABijection : Error {
    using Error::Error;
};
struct BoundViolated : Error {
    using Error::Error;
};

} // namespace gbent
