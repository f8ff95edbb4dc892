#pragma once

#include <stdexcept>
#include <string>

namespace recforge {

// Thrown when an operation would exceed its configured resource budget
// (memory, exact-arithmetic term count, enumeration size). Kept distinct
// from std::invalid_argument so callers can report it as a refusal rather
// than a malformed input.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace recforge
