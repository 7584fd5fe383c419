#pragma once

#include <stdexcept>
#include <string>

namespace fsg {

// Raised when an input exceeds a configured size/width budget. The caller
// chose the budget; the solver refuses rather than running unbounded.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a problem instance has no solution at all (disconnected
// terminals, adjacent terminals in node multiway cut, infinite diameter).
struct Infeasible : std::runtime_error {
    explicit Infeasible(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal theorem-backed check fails. The constructions are
// guaranteed to satisfy these checks, so a throw signals an implementation bug,
// never a property of the input.
struct InvariantViolation : std::logic_error {
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fsg
