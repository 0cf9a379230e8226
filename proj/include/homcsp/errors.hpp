#pragma once

#include <stdexcept>
#include <string>

namespace homcsp {

/// Base of every refusal raised by the library. `reason()` is a short
/// machine-readable code (for example "budget_exceeded"), `what()` carries
/// the human-readable detail.
class Refusal : public std::runtime_error {
public:
    Refusal(std::string reason, const std::string& detail)
        : std::runtime_error(detail), reason_(std::move(reason)) {}

    const std::string& reason() const noexcept { return reason_; }

private:
    std::string reason_;
};

/// Input violates a documented precondition.
class InvalidInput : public Refusal {
public:
    explicit InvalidInput(const std::string& detail) : Refusal("invalid_input", detail) {}
};

/// An enumeration or table would exceed its configured budget. Engines throw
/// this instead of returning a partial count.
class BudgetExceeded : public Refusal {
public:
    explicit BudgetExceeded(const std::string& detail) : Refusal("budget_exceeded", detail) {}
};

/// A hypothesis required by a bound or by the reduction pipeline fails.
class HypothesisViolation : public Refusal {
public:
    explicit HypothesisViolation(const std::string& detail)
        : Refusal("hypothesis_violation", detail) {}
};

}  // namespace homcsp
