#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bitset.hpp"

namespace scenbdd {

enum class Mode { ShortestPath, MaxFlow };

// One network edge with its stochastic data.  `weight` is a length in
// ShortestPath mode and a capacity in MaxFlow mode.  `p` is the nominal
// probability of the edge surviving; taking the decision x_e = 1 shifts it
// to p + delta.
struct Edge {
    int id = 0;  // 1-based, equal to the position in the edge list
    std::string tail;
    std::string head;
    double weight = 0.0;
    double p = 0.0;
    double delta = 0.0;
    double cost = 1.0;
    bool decidable = false;
};

// Ground data of one problem instance.  Immutable after construction.
struct NetworkInstance {
    std::vector<std::string> nodes;
    std::vector<Edge> edges;
    Mode mode = Mode::ShortestPath;
    std::string source;
    std::string sink;
    bool directed = false;
    std::optional<double> cutoff;   // absent = unbounded
    std::optional<double> penalty;  // recourse value past the cutoff / for disconnection
    double budget = 0.0;

    int num_edges() const { return static_cast<int>(edges.size()); }
    int num_nodes() const { return static_cast<int>(nodes.size()); }

    int node_index(const std::string& id) const;

    std::vector<int> decidable_edges() const;

    // Objective direction: recourse is minimized for shortest paths and the
    // reported value is the path length; for max flow the reported value is
    // the flow itself and interdiction minimizes its expectation.
    bool maximizing_flow() const { return mode == Mode::MaxFlow; }
};

// Parses the sectioned instance text format.  Throws Error::validation with
// a line number on syntax errors and with the violated rule on semantic
// errors; a returned instance satisfies every invariant.
NetworkInstance parse_instance(const std::string& text);

NetworkInstance read_instance_file(const std::string& path);

// Returns all invariant violations, one human-readable line each; empty
// means the instance is valid.
std::vector<std::string> validate_instance(const NetworkInstance& inst);

// Canonical text form; parse(serialize(inst)) reproduces the instance and
// serialize(parse(text)) is the identity on canonical input.
std::string serialize_instance(const NetworkInstance& inst);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace scenbdd
