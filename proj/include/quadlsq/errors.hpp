#pragma once

#include <stdexcept>

namespace quadlsq {

/// Rejected input: malformed node sets, unsupported counts, unreadable files.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Numerical breakdown: degree overflow, singular diagonal, Newton failure.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace quadlsq
