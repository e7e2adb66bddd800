#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bdd.hpp"
#include "ladder.hpp"

namespace scenbdd {

constexpr double kProbTol = 1e-9;

// Exact distribution of the recourse value over one compiled ladder.
// cumulative[i] is P[f <= alpha_i] in the ladder's internal orientation;
// equality[i] the mass of level i; penalty_mass whatever lies past the last
// level.  expected_value is stated in reported units (path length, or flow
// for MaxFlow instances).
struct ProbabilityReport {
    std::vector<double> cumulative;
    std::vector<double> equality;
    std::vector<double> level_values;  // reported value per level
    double penalty_mass = 0.0;
    std::optional<double> penalty_value;
    double expected_value = 0.0;
};

// P[Phi(xi) = 1] under independent Bernoulli(p_e) edge events, by one
// bottom-up pass that touches each node exactly once.  `p` is indexed by
// edge - 1.
double prob(const Bdd& b, const std::vector<double>& p);

// Same, with every node visit counted; used by tests to pin the
// node-linearity property.
double prob_counted(const Bdd& b, const std::vector<double>& p, size_t* visits);

// P[Phi(xi) = 1] with probabilities shifted to p_e + x_e * delta_e.
double prob_conditioned(const Bdd& b, const std::vector<double>& p,
                        const std::vector<double>& delta, const std::vector<uint8_t>& x);

// Per-edge shifted probabilities; validates that every p + x*delta lies in
// [0,1].
std::vector<double> shifted_probabilities(const NetworkInstance& inst,
                                          const std::vector<uint8_t>& x);

// Evaluates cumulative probabilities across the per-level BDDs (which must
// share one variable order), derives the level masses by first differences,
// and assembles the expected recourse value.  Throws Error::internal
// ("ladder/BDD mismatch") if the cumulative sequence decreases, and
// Error::validation when residual mass exists but no penalty is defined.
ProbabilityReport report(const NetworkInstance& inst, const CriticalLadder& ladder,
                         const std::vector<Bdd>& bdds, const std::vector<uint8_t>& x);

std::string serialize_report(const ProbabilityReport& report);

}  // namespace scenbdd
