#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "error.hpp"
#include "instance.hpp"

namespace scenbdd {

// Optimizers treat values this close as equal, so the lexicographic
// tie-break is immune to round-off between algebraically equal routes.
constexpr double kTieTol = 1e-12;

inline std::vector<uint8_t> zero_decision(const NetworkInstance& inst) {
    return std::vector<uint8_t>(inst.edges.size(), 0);
}

// Parses a {0,1} decision string (leftmost char = edge 1) and checks it
// only selects decidable edges.
inline std::vector<uint8_t> parse_decision(const NetworkInstance& inst, const std::string& bits) {
    if (static_cast<int>(bits.size()) != inst.num_edges()) {
        throw Error::validation("decision string length " + std::to_string(bits.size()) +
                                " != |E| = " + std::to_string(inst.num_edges()));
    }
    std::vector<uint8_t> x(bits.size(), 0);
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            if (!inst.edges[i].decidable) {
                throw Error::validation("decision selects non-decidable edge " +
                                        std::to_string(i + 1));
            }
            x[i] = 1;
        } else if (bits[i] != '0') {
            throw Error::validation("decision string must contain only 0/1");
        }
    }
    return x;
}

inline std::string decision_to_string(const std::vector<uint8_t>& x) {
    std::string out(x.size(), '0');
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i]) out[i] = '1';
    }
    return out;
}

inline double decision_cost(const NetworkInstance& inst, const std::vector<uint8_t>& x) {
    double cost = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i]) cost += inst.edges[i].cost;
    }
    return cost;
}

// Tie order among equal-value optima: the decision whose selected edge
// index list is lexicographically smaller wins, so a lone edge 1 beats a
// lone edge 2 and an empty selection beats both.
inline bool decision_preferred(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
    std::vector<int> sa, sb;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i]) sa.push_back(static_cast<int>(i));
    }
    for (size_t i = 0; i < b.size(); ++i) {
        if (b[i]) sb.push_back(static_cast<int>(i));
    }
    return sa < sb;
}

// Visits every budget-feasible decision vector, in lexicographic order of
// the full bit string.  Throws Error::size_cap when the number of
// decidable edges exceeds `max_decidable`.
inline void for_each_feasible_decision(const NetworkInstance& inst, int max_decidable,
                                       const std::function<void(const std::vector<uint8_t>&)>& fn) {
    std::vector<int> decidable = inst.decidable_edges();
    int k = static_cast<int>(decidable.size());
    if (k > max_decidable) {
        throw Error::size_cap("too many decidable edges (" + std::to_string(k) + " > " +
                              std::to_string(max_decidable) +
                              "); write the model file and use an external solver");
    }
    std::vector<uint8_t> x(inst.edges.size(), 0);
    for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
        double cost = 0.0;
        for (int j = 0; j < k; ++j) {
            // first decidable edge is the most significant bit: ascending
            // masks enumerate decision vectors in lexicographic order
            bool on = (mask >> (k - 1 - j)) & 1;
            x[decidable[j] - 1] = on ? 1 : 0;
            if (on) cost += inst.edges[decidable[j] - 1].cost;
        }
        if (cost <= inst.budget + 1e-9) fn(x);
    }
}

}  // namespace scenbdd
