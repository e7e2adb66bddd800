#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bitset.hpp"

namespace scenbdd {

// Node references: 0 is the false terminal, 1 the true terminal, anything
// >= 2 refers to nodes[ref - 2].
using NodeRef = int32_t;
constexpr NodeRef kFalseRef = 0;
constexpr NodeRef kTrueRef = 1;

struct BddNode {
    int layer;   // 1..num_vars
    NodeRef lo;  // FALSE-arc target
    NodeRef hi;  // TRUE-arc target
};

// Reduced ordered binary decision diagram over edge variables.  Layer k
// tests the edge order[k-1].  The node table always lists children before
// parents, so a single ascending pass visits the diagram bottom-up.
struct Bdd {
    int num_vars = 0;
    std::vector<int> order;      // permutation of 1..num_vars
    std::vector<BddNode> nodes;  // internal nodes only
    NodeRef root = kFalseRef;

    bool degenerate() const { return root < 2; }
    int num_internal() const { return static_cast<int>(nodes.size()); }
    int edge_of_layer(int layer) const { return order[layer - 1]; }
    const BddNode& node(NodeRef ref) const { return nodes[ref - 2]; }
};

enum class OrderingHeuristic { OccurrenceAscending, CuthillMcKeeLike, Identity, Explicit };

struct BddStats {
    int64_t total_size = 0;  // internal nodes plus both terminals; 1 when degenerate
    int width = 0;           // max layer width
    std::vector<int> layer_widths;
};

constexpr uint64_t kDefaultNodeCap = 10'000'000;

// Variable order over edges 1..num_edges from the given heuristic.  The
// occurrence heuristic sorts by ascending occurrence count across the whole
// family (ties by index), so unused edges come first and never create
// nodes; the Cuthill-McKee-like heuristic runs breadth-first over the edge
// co-occurrence graph for a low-bandwidth order.
std::vector<int> order_edges(int num_edges, const std::vector<Scenario>& family,
                             OrderingHeuristic heuristic,
                             const std::vector<int>* explicit_order = nullptr);

// Compiles the monotone Boolean function whose minimal true points are
// `min_true_points` (must be an antichain) into a reduced ordered BDD under
// `order`.  eval(bdd, xi) == 1 iff xi contains some member of the family.
// Throws Error::size_cap when the unique table outgrows `node_cap`.
Bdd compile_monotone(const std::vector<Scenario>& min_true_points, const std::vector<int>& order,
                     uint64_t node_cap = kDefaultNodeCap);

// Swaps the arc labels of every node: the result encodes the negated dual
// function, i.e. eval(dual, xi) == eval(original, complement(xi)).  An
// involution that preserves node count and layout.
Bdd dual_bdd(const Bdd& b);

bool eval(const Bdd& b, const Scenario& xi);

BddStats stats(const Bdd& b);

// Structural invariant check: orderedness, reducedness, unique root,
// children-before-parents table layout.  Empty result means valid.
std::vector<std::string> validate_bdd(const Bdd& b);

// Deterministic node ids: reverse postorder from the root with the
// FALSE-arc subtree visited first, so the root gets id 1 and every parent
// a smaller id than its children.  Indexed by node-table position.
std::vector<int> dump_node_ids(const Bdd& b);

// Text dump using dump_node_ids; terminals print as F/T.
std::string dump_bdd(const Bdd& b);

// Max span of one scenario's variables in layer positions: the bandwidth
// of the family's incidence matrix under the given order.
int incidence_bandwidth(const std::vector<Scenario>& family, const std::vector<int>& order);

}  // namespace scenbdd
