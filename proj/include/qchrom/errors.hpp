#pragma once

#include <stdexcept>
#include <string>

namespace qchrom {

// Structural misuse: bad dimensions, malformed files, out-of-range arguments.
// The CLI maps this to exit code 2.
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// A certificate or witness failed a mathematical check hard enough that the
// requested operation cannot proceed (CLI exit code 1).
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qchrom
