#pragma once

#include <stdexcept>
#include <string>

namespace hypela {

// Argument outside the documented domain of an operation. Maps to CLI exit code 2.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A computation that should have succeeded did not (no convergence, step underflow, ...).
// Maps to CLI exit code 1.
class numeric_failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hypela
