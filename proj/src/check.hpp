#pragma once

#include <optional>
#include <string>

#include "bundle.hpp"

namespace scenbdd {

struct CheckResult {
    bool pass = false;
    std::string report;        // human-readable pass/fail lines
    double optimum = 0.0;      // internal enumeration optimum
    std::string optimum_x;     // decision string of the optimum
};

// Full oracle-vs-pipeline equivalence on one instance: compares the
// aggregated expected value against brute force for every budget-feasible
// decision, and the enumeration optimizer against the oracle optimizer.
// `ladder` overrides enumeration when provided (it is validated first).
CheckResult run_check(const NetworkInstance& inst, const std::optional<CriticalLadder>& ladder,
                      uint64_t node_cap = kDefaultNodeCap);

}  // namespace scenbdd
