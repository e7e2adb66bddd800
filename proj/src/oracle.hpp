#pragma once

#include <map>
#include <vector>

#include "decisions.hpp"
#include "instance.hpp"

namespace scenbdd {

constexpr int kOracleEdgeLimit = 24;
constexpr int kOracleDecidableLimit = 20;

// Brute-force ground truth: the recourse value of every scenario, computed
// once per instance directly from the graph (Dijkstra / max flow), plus
// exact expectations under any decision vector.  Everything here is the
// reference the aggregation pipeline is tested against.
class OracleTable {
  public:
    explicit OracleTable(const NetworkInstance& inst, int edge_limit = kOracleEdgeLimit);

    // Reported recourse value of a scenario given as an edge bit mask
    // (bit e-1 = edge e survives).
    double value(uint64_t mask) const { return values_[mask]; }

    uint64_t num_scenarios() const { return values_.size(); }

    double expected(const std::vector<uint8_t>& x) const;

    // Distribution over critical values under decision x, keys clustered
    // with the recourse tolerance.
    std::map<double, double> distribution(const std::vector<uint8_t>& x) const;

    // CSV rows `scenario-bitstring,probability,f-value`.
    std::string csv(const std::vector<uint8_t>& x) const;

  private:
    const NetworkInstance& inst_;
    std::vector<double> values_;
};

struct OracleResult {
    std::map<double, double> distribution;
    double expected_value = 0.0;
};

OracleResult oracle_expected(const NetworkInstance& inst, const std::vector<uint8_t>& x);

struct BestDecision {
    std::vector<uint8_t> x;
    double value = 0.0;
};

// Exhaustive optimum over budget-feasible decisions; ties break to the
// lowest-indexed selection, matching solve_by_enumeration.
BestDecision oracle_best_decision(const NetworkInstance& inst);

}  // namespace scenbdd
