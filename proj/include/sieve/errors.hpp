#pragma once

#include <stdexcept>
#include <string>

namespace sieve {

// Malformed input: bad shapes, invalid fillings, unparsable text.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An exhaustive enumeration would exceed the configured size limit.
class SizeGuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A partial operator (crystal e_j, composite e-bar) is undefined on its input.
class OperatorUndefined : public std::domain_error {
public:
    OperatorUndefined(const std::string& what, int letter)
        : std::domain_error(what), letter_(letter) {}

    // The index j of the constituent e_j that failed.
    int letter() const noexcept { return letter_; }

private:
    int letter_;
};

// Exact arithmetic produced something that should have been impossible, such
// as a nonzero remainder in a division that must be exact.
class ArithmeticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sieve
