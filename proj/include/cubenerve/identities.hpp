#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace cubenerve {

// One law checked over one nerve.  Exhaustive checks run over every
// applicable configuration in the generated pool; the others draw random
// instances until `samples` of them applied.
struct suite_check {
    std::string target;
    std::string name;
    int samples = 0;
    int failures = 0;
    bool exhaustive = false;
};

struct suite_report {
    int max_dim = 0;
    std::vector<suite_check> checks;
    int total_samples() const;
    int total_failures() const;
    bool passed() const { return total_failures() == 0; }
};

// Checks every composition law of the nerve operations (degeneracies,
// connections, composers, composites, squeezes and flattenings) on cubes
// of dimension at most max_dim, over two nerves: the chain-level interval
// and the hand-built two-level category.  Deterministic for a fixed seed.
suite_report run_identity_suite(int max_dim, int samples,
                                std::uint64_t seed = 1);

nlohmann::json suite_report_to_json(const suite_report& r);
std::string format_suite_report(const suite_report& r);

} // namespace cubenerve
