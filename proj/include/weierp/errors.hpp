#pragma once

#include <stdexcept>
#include <string>

namespace weierp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// malformed input file
struct ParseError : Error {
    using Error::Error;
};

// well-formed input that violates a basis invariant
struct ValidationError : Error {
    using Error::Error;
};

// a coefficient beyond the known precision of a series was requested
struct PrecisionExceeded : Error {
    long requested;
    long available;
    PrecisionExceeded(long requested_, long available_)
        : Error("coefficient q^" + std::to_string(requested_) +
                " requested, series only known modulo O(q^" +
                std::to_string(available_) + ")"),
          requested(requested_), available(available_) {}
};

// input data does not carry enough coefficients for the requested computation;
// `recommended` is the precision to re-fetch
struct InsufficientPrecision : Error {
    long recommended;
    InsufficientPrecision(const std::string& what_, long recommended_)
        : Error(what_ + " (recommended precision: " + std::to_string(recommended_) + ")"),
          recommended(recommended_) {}
};

struct NetworkError : Error {
    using Error::Error;
};

struct UpstreamFormatError : Error {
    using Error::Error;
};

// an internal mathematical invariant failed: corrupted input data or a bug
struct DataIntegrityError : Error {
    using Error::Error;
};

// all rows vanished during reduction; impossible for a valid basis
struct DegenerateInputError : Error {
    using Error::Error;
};

// the two independent criteria disagreed; never a valid output
struct MethodDisagreementError : Error {
    using Error::Error;
};

}  // namespace weierp
