#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rdk {

// Malformed or out-of-family object (CLI exit code 3).
class InvalidObject : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was applied where its precondition fails.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Maximum number of objects an enumeration may produce. Defaults to 2e6,
// overridden by the RDK_BUDGET environment variable or set_budget().
std::size_t enumeration_budget();
void set_budget(std::size_t cap);

// Throws BudgetExceeded once count passes the budget.
void charge_budget(std::size_t count, const char* what);

}  // namespace rdk
