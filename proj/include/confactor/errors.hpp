#pragma once

#include <stdexcept>
#include <string>

namespace confactor {

// Input text that does not conform to a documented file format.
struct MalformedInput : std::runtime_error {
    explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

// A stated precondition of an operation does not hold.
struct PreconditionViolated : std::runtime_error {
    explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

// The distance gadget cannot exist for the requested vertex pair: some common
// neighbor has all of its incident edges forced into every factor.
struct InfeasibleConstraint : std::runtime_error {
    explicit InfeasibleConstraint(const std::string& what) : std::runtime_error(what) {}
};

// An invariant that should hold by construction failed; indicates a bug.
struct InternalInconsistency : std::logic_error {
    explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

// An edge coloring with unequal red/blue degree at some vertex was passed to
// an operation that needs an equitable one.
struct NotEquitable : std::runtime_error {
    explicit NotEquitable(const std::string& what) : std::runtime_error(what) {}
};

// A circuit that is not a switch on the given factor.
struct NotASwitch : std::runtime_error {
    explicit NotASwitch(const std::string& what) : std::runtime_error(what) {}
};

// A brute-force enumeration ran out of budget before reaching a conclusion.
struct BudgetExhausted : std::runtime_error {
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace confactor
