#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bitset.hpp"
#include "instance.hpp"

namespace scenbdd {

// One critical value with the minimal survivable scenarios that newly
// achieve it.
struct Level {
    double alpha = 0.0;
    std::vector<Scenario> min_true_points;
};

// Ordered critical values of the recourse function together with their
// minimal scenario families.  Alphas increase strictly; within a level the
// family is an antichain; no scenario of an earlier level is contained in a
// scenario of a later one.  For MaxFlow instances alpha is the negated flow
// value so that the same sublevel machinery applies; objective_value()
// recovers the reported value.
struct CriticalLadder {
    int num_edges = 0;
    Mode mode = Mode::ShortestPath;
    std::vector<Level> levels;
    std::optional<double> penalty_alpha;  // catch-all level past the cutoff

    int num_levels() const { return static_cast<int>(levels.size()); }

    double objective_value(int level) const {
        return mode == Mode::MaxFlow ? -levels[level].alpha : levels[level].alpha;
    }

    // Minimal true points of the sublevel function at `level`: the
    // minimized union of all families up to and including it.
    std::vector<Scenario> cumulative_family(int level) const;
};

// Assembles a ladder from exact-value scenario classes: sorts by alpha,
// minimizes each class, and drops members dominated by earlier levels so
// the cross-level invariants hold by construction.
CriticalLadder build_ladder(int num_edges, Mode mode,
                            const std::map<double, std::vector<Scenario>>& classes,
                            std::optional<double> penalty_alpha);

// Returns all ladder invariant violations; empty means valid.
std::vector<std::string> validate_ladder(const CriticalLadder& ladder);

// Parses the ladder text format and verifies every invariant.
CriticalLadder load_ladder(const std::string& text, const NetworkInstance& inst);

std::string serialize_ladder(const CriticalLadder& ladder);

// Minimal transversals (minimal hitting sets) of the sublevel family at
// `level`: the minimal edge-failure sets forcing the recourse above that
// level's value.  Throws Error::size_cap when the intermediate family
// exceeds `bound`.
std::vector<Scenario> failure_clutter(const CriticalLadder& ladder, int level, size_t bound);

// Exact dualization of an arbitrary antichain; exposed for tests and the
// clutter operation.
std::vector<Scenario> minimal_transversals(const std::vector<Scenario>& family, int width,
                                           size_t bound);

}  // namespace scenbdd
