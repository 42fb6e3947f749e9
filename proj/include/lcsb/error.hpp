#pragma once

#include <stdexcept>
#include <string>

namespace lcsb {

// Bad user input or a violated precondition. The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A numeric guard refused to evaluate (overflow risk and similar).
class NumericGuardError : public std::runtime_error {
public:
    explicit NumericGuardError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool ok, const std::string& message) {
    if (!ok) throw ValidationError(message);
}

}  // namespace lcsb
