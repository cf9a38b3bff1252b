#pragma once

#include <stdexcept>
#include <string>

namespace hyperembed {

// Base for all library errors. The CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad inputs: parse failures, invalid parameters, malformed files. Exit code 2.
struct ConfigError : Error {
    using Error::Error;
};

// The binarized Laplacian graph is disconnected where connectivity is
// required. Exit code 3.
struct AssumptionError : Error {
    using Error::Error;
};

// Eigensolver failures, insufficient spectrum, metric undefined. Exit code 4.
struct NumericalError : Error {
    using Error::Error;
};

}  // namespace hyperembed
