#pragma once

#include "ladder.hpp"
#include "values.hpp"

namespace scenbdd {

// Default scenario-enumeration guard for the max-flow ladder.
constexpr int kFlowOracleLimit = 24;

// Enumerates the distinct simple source-sink path lengths up to the cutoff
// via bounded backtracking; each level holds the edge sets of the paths of
// exactly that length.  A penalty level is attached iff the cutoff is
// finite.  Throws Error::validation ("recourse undefined") when the graph
// has no source-sink path and no penalty is defined.
CriticalLadder enumerate_shortest_paths(const NetworkInstance& inst);

// Builds the ladder of distinct achievable max-flow values by brute-force
// scenario enumeration with a max-flow oracle.  Internally the ladder is
// oriented by negated flow so that smaller alpha = more demanding level.
// Throws Error::size_cap when |E| exceeds `oracle_limit`.
CriticalLadder enumerate_flow_levels(const NetworkInstance& inst,
                                     int oracle_limit = kFlowOracleLimit);

// Mode dispatch used by the pipeline and the C API.
CriticalLadder enumerate_ladder(const NetworkInstance& inst);

}  // namespace scenbdd
