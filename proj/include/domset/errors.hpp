#pragma once

#include <stdexcept>
#include <string>

namespace domset {

// Exit-code protocol used by the CLI: 1 usage/parse, 2 precondition,
// 3 budget, 4 invariant/bound violation.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace domset
