#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bdd.hpp"
#include "instance.hpp"
#include "ladder.hpp"
#include "probability.hpp"

namespace scenbdd {

enum class RowSense { Le, Ge, Eq };

struct MipVariable {
    std::string name;
    bool binary = false;
    double lb = 0.0;
    double ub = 1.0;
};

struct MipTerm {
    int var = -1;
    double coeff = 0.0;
};

struct MipConstraint {
    std::string name;
    std::vector<MipTerm> terms;
    RowSense sense = RowSense::Eq;
    double rhs = 0.0;
};

// Rows describing one BDD node: a single equality for a non-decidable
// layer edge, or the four big-M inequalities switching between the nominal
// and the shifted probability.
struct NodeBlock {
    int var = -1;
    int dump_id = 0;
    std::array<int, 4> rows{-1, -1, -1, -1};
    int num_rows = 0;
};

struct LevelBlock {
    int root_var = -1;       // -1 when the BDD is degenerate
    double root_const = 0.0; // used when root_var < 0
    std::vector<NodeBlock> nodes;  // ascending dump id (parents first)
    int peq_var = -1;
    int peq_row = -1;
    // Size of the level block under the convention that keeps terminal
    // nodes as variables with their fixing rows.
    int64_t paper_variables = 0;
    int64_t paper_constraints = 0;
};

// Solver-agnostic exact reformulation: one probability-flow block per
// ladder level, first-difference level probabilities, budget row and
// telescoped objective.
struct MipModel {
    std::vector<MipVariable> variables;
    std::vector<MipConstraint> constraints;
    std::vector<MipTerm> objective;  // minimize
    std::vector<LevelBlock> levels;
    std::vector<int> x_var_of_edge;  // edge-1 -> variable index, -1 if not decidable
    int penalty_var = -1;
    int penalty_row = -1;
    int budget_row = -1;

    int num_binaries() const;
};

// Builds the model.  All BDDs must share one variable order (hard error
// otherwise) and must correspond level-by-level to the ladder.
MipModel emit_mip(const NetworkInstance& inst, const CriticalLadder& ladder,
                  const std::vector<Bdd>& bdds);

// LP-format text (objective, subject-to, bounds, binaries sections) with
// deterministic naming and 17-significant-digit numerals.
std::string write_lp(const MipModel& model);

// Hash of the row/column pattern only: names, senses and term structure,
// no numeric coefficients.  Stays fixed when budget or deltas change.
uint64_t constraint_pattern_hash(const MipModel& model);

// Fixes the binary decisions and propagates the node equalities bottom-up
// through the model rows, independently of the BDD evaluation path.
// Verifies that the four-inequality blocks pin each node value exactly.
struct PropagationResult {
    std::vector<double> level_root;
    std::vector<double> peq;
    double peq_penalty = 0.0;
    double objective = 0.0;
};

PropagationResult propagate_fixed_decision(const MipModel& model, const std::vector<uint8_t>& x);

constexpr int kEnumerationDecidableLimit = 24;

// Reference optimizer: exhaustive over budget-feasible decisions using the
// probability-report evaluation; ties break to the lowest-indexed
// selection (see decision_preferred).
struct EnumerationSolution {
    std::vector<uint8_t> x;
    double value = 0.0;
};

EnumerationSolution solve_by_enumeration(const NetworkInstance& inst, const CriticalLadder& ladder,
                                         const std::vector<Bdd>& bdds,
                                         int max_decidable = kEnumerationDecidableLimit);

}  // namespace scenbdd
