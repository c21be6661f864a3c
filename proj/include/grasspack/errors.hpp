#pragma once

#include <stdexcept>
#include <string>

namespace grasspack {

// Bad parameters or malformed input; the CLI maps this to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Mathematically impossible request (odd i for an orthogonal spread, a
// subspace that is not totally singular, ...). CLI exit code 1.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A construction exists in principle but this library does not build it.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Integer arithmetic left the representable range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

}  // namespace grasspack
