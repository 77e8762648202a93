#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace osculum {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct InvalidParameters : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct DegenerateCurveError : Error {
    using Error::Error;
};

// Thrown when a randomly sampled configuration is not generic enough; callers resample.
struct GenericityFailure : Error {
    using Error::Error;
};

// General-position failure carrying the indices of the offending subset.
struct DegeneracyError : GenericityFailure {
    DegeneracyError(const std::string& what, std::vector<std::size_t> w)
        : GenericityFailure(what), witness(std::move(w)) {}
    std::vector<std::size_t> witness;
};

struct NotInGeneralPosition : GenericityFailure {
    using GenericityFailure::GenericityFailure;
};

struct DegenerateConicError : GenericityFailure {
    using GenericityFailure::GenericityFailure;
};

}  // namespace osculum
