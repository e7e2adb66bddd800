#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "instance.hpp"

namespace scenbdd {

struct BenchConfig {
    int n = 1;                 // grid parameter: (n+1)^2 nodes
    int repetitions = 32;      // sampled networks
    double alpha_factor = 1.1; // cutoff = factor * shortest distance; <= 0 means none
    uint64_t seed = 1;
    uint64_t node_cap = 0;     // 0 = default
};

// Samples random connected grid road networks with edge density ~1.2 per
// node, runs ladder enumeration and per-level BDD compilation for every
// origin-destination pair, and reports quantiles of the summed BDD sizes
// as one table row.  Deterministic for a fixed config.
std::string bench_grid(const BenchConfig& config);

// The sampled network itself, exposed for tests.
NetworkInstance sample_grid_network(int n, std::mt19937_64& rng);

}  // namespace scenbdd
