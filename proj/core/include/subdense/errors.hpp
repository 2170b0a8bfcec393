#pragma once

#include <stdexcept>
#include <string>

namespace subdense {

// Violated input contract: bad ids, malformed files, infeasible knobs.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A hard size/node guard refused to run. Never downgraded to an approximation.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace subdense
