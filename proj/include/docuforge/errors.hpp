#pragma once

#include <stdexcept>
#include <string>

namespace docuforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotFoundError : Error {
    using Error::Error;
};

struct DecodeError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

struct UnsupportedGraph : Error {
    using Error::Error;
};

struct DivergenceDetected : Error {
    using Error::Error;
};

}  // namespace docuforge
