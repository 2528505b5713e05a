#pragma once

#include <stdexcept>
#include <string>

namespace coinv {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Division by an exact zero (rational, polynomial or field element).
struct division_by_zero : error {
    explicit division_by_zero(const std::string& msg = "division by zero") : error(msg) {}
};

// Malformed textual input (numbers, parameter expressions, fillings).
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

// Arguments outside a function's domain (bad shapes, non-coprime hooks,
// a value queried as integer that is not one, ...).
struct domain_error : error {
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// An enumeration whose search space is not bounded by the constraints.
struct unbounded_error : error {
    explicit unbounded_error(const std::string& msg) : error(msg) {}
};

// Hard size limits (linear-extension vertex count, brute-force cell caps).
struct limit_error : error {
    explicit limit_error(const std::string& msg) : error(msg) {}
};

// An inconsistent constraint derivation (cycle in the order forced on P).
struct constraint_error : error {
    explicit constraint_error(const std::string& msg) : error(msg) {}
};

// Diagram rebuilding failed or was ambiguous.
struct reconstruction_error : error {
    explicit reconstruction_error(const std::string& msg) : error(msg) {}
};

// Two independent computation routes disagreed.
struct cross_check_error : error {
    explicit cross_check_error(const std::string& msg) : error(msg) {}
};

} // namespace coinv
