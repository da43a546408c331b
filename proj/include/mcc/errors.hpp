#pragma once

#include <stdexcept>
#include <string>

namespace mcc {

// Invalid arguments or mismatched domain parameters. CLI exit code 1.
struct ParameterError : std::invalid_argument {
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// A property that must hold was found violated (tampered descriptor, failed
// norm condition, broken relation). CLI exit code 2.
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

// The request exceeds a configured resource bound. CLI exit code 3.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mcc
