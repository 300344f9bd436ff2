#include "rdk/errors.hpp"

#include <cstdlib>
#include <optional>

namespace rdk {

namespace {
std::optional<std::size_t> g_override;
}

std::size_t enumeration_budget() {
    if (g_override) return *g_override;
    if (const char* env = std::getenv("RDK_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return static_cast<std::size_t>(v);
    }
    return 2'000'000;
}

void set_budget(std::size_t cap) { g_override = cap; }

void charge_budget(std::size_t count, const char* what) {
    if (count > enumeration_budget())
        throw BudgetExceeded(std::string("enumeration budget exceeded: ") + what);
}

}  // namespace rdk
