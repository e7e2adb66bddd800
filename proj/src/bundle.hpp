#pragma once

#include <cstdint>
#include <vector>

#include "bdd.hpp"
#include "instance.hpp"
#include "ladder.hpp"
#include "probability.hpp"

namespace scenbdd {

// The compiled pipeline for one instance: the ladder plus one BDD per
// level.  In the default mode all BDDs share one variable order (required
// for model emission); per-level occurrence orders exist for size
// statistics and benchmarking only.
struct BddBundle {
    NetworkInstance instance;
    CriticalLadder ladder;
    std::vector<int> shared_order;  // empty in per-level-order mode
    std::vector<Bdd> bdds;
    std::vector<std::vector<Scenario>> level_families;  // what each BDD encodes

    int num_levels() const { return static_cast<int>(bdds.size()); }

    int64_t total_bdd_size() const;
};

struct CompileOptions {
    OrderingHeuristic heuristic = OrderingHeuristic::OccurrenceAscending;
    std::vector<int> explicit_order;  // used when heuristic == Explicit
    uint64_t node_cap = kDefaultNodeCap;
    bool per_level_orders = false;  // stats/benchmark mode only
};

// Compiles every sublevel function of the ladder: level i encodes the
// minimized union of the scenario families up to level i.
BddBundle compile_bundle(NetworkInstance inst, CriticalLadder ladder,
                         const CompileOptions& options = {});

ProbabilityReport evaluate(const BddBundle& bundle, const std::vector<uint8_t>& x);

}  // namespace scenbdd
