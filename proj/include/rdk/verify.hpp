#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rdk/paths.hpp"

namespace rdk {

struct Family {
    Slope slope;
    int n = 0;
};

// Parameter grid for a check: either a single family or every coprime family
// with (a+b)n <= max_size (each check narrows this further to its own domain).
struct Grid {
    int max_size = 12;
    std::optional<Family> only;
};

struct Report {
    std::string check;
    std::string grid;
    long instances = 0;
    long failure_count = 0;
    std::vector<std::string> failures;  // first reproducers, capped
    double seconds = 0.0;

    bool passed() const { return failure_count == 0; }
    void fail(std::string reproducer);
};

struct Check {
    std::string name;
    std::string claim;
    std::function<void(const Grid&, Report&)> run;
};

// Families (a,b,n), n >= 1, with (a+b)n <= max_size, ordered by a, b, n.
std::vector<Family> families(int max_size);
std::vector<Family> grid_families(const Grid& g);

const std::vector<Check>& check_registry();
const Check* find_check(const std::string& name);
Report run_check(const Check& c, const Grid& g);

std::string report_to_json(const Report& r);

}  // namespace rdk
