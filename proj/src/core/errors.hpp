#pragma once

#include <stdexcept>
#include <string>

namespace emso {

// Guard violations: the request is well-formed but refused because the
// required computation is outside the supported envelope.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad files, bad parameters, parse failures.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Numeric-domain violations (preconditions of the math operations).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace emso
