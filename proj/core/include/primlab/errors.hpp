#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace primlab {

// A materialized set would need more bits than the configured cap allows.
// The CLI maps this to exit code 3.
class CapExceededError : public std::runtime_error {
public:
    CapExceededError(const std::string& what_arg, std::uint64_t required, std::uint64_t cap)
        : std::runtime_error(what_arg + " (requires " + std::to_string(required) +
                             " bits, cap " + std::to_string(cap) + ")"),
          required_(required),
          cap_(cap) {}

    std::uint64_t required() const { return required_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t required_;
    std::uint64_t cap_;
};

// Malformed arguments or out-of-range parameters. CLI exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A checked identity produced a counterexample. Thrown only where the
// operation's contract promises the identity (e.g. a composite inside a
// prime window); verification routines that merely test identities
// return verdicts instead.
class IdentityViolationError : public std::runtime_error {
public:
    IdentityViolationError(const std::string& check, std::uint64_t counterexample)
        : std::runtime_error(check + ": counterexample " + std::to_string(counterexample)),
          check_(check),
          counterexample_(counterexample) {}

    const std::string& check() const { return check_; }
    std::uint64_t counterexample() const { return counterexample_; }

private:
    std::string check_;
    std::uint64_t counterexample_;
};

}  // namespace primlab
