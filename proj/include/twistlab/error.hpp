#pragma once

#include <stdexcept>
#include <string>

namespace twistlab {

/// Base class for all errors raised by the library. Verification drivers
/// catch this type and convert it into an `error` report entry instead of
/// letting it escape mid-run.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Arithmetic violation: division by zero, substitution producing a zero
/// denominator, and similar.
struct arith_error : error {
    explicit arith_error(const std::string& msg) : error(msg) {}
};

/// An exp/log argument failed the nilpotency (resp. unipotency) requirement.
/// Carries the first power that did not vanish as the witness.
struct nilpotency_error : error {
    int witness_power;
    nilpotency_error(const std::string& msg, int power)
        : error(msg + " (power " + std::to_string(power) + " does not vanish)"),
          witness_power(power) {}
};

struct dimension_error : error {
    explicit dimension_error(const std::string& msg) : error(msg) {}
};

struct parse_error : error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

/// Lookup of an unknown catalog / generator / parameter name.
struct name_error : error {
    explicit name_error(const std::string& msg) : error(msg) {}
};

}  // namespace twistlab
