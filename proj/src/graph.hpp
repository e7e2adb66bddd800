#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "instance.hpp"

namespace scenbdd {

constexpr double kInfDist = std::numeric_limits<double>::infinity();

// Indexed adjacency view of a NetworkInstance.  Undirected instances get
// both orientations of every edge; `edge_id` always refers to the original
// 1-based instance edge, so scenario masks apply unchanged.
class GraphView {
  public:
    struct Arc {
        int to;
        int edge_id;
        double weight;
    };

    explicit GraphView(const NetworkInstance& inst);

    int num_nodes() const { return static_cast<int>(adj_.size()); }
    int source() const { return source_; }
    int sink() const { return sink_; }
    const std::vector<Arc>& out(int node) const { return adj_[node]; }
    int num_edges() const { return num_edges_; }

    // Shortest source-sink distance using only the surviving edges;
    // kInfDist when disconnected.
    double shortest_path(const Scenario& surviving) const;

    // Distance from every node to `target` in the full graph (arcs
    // reversed for directed instances); the admissible pruning bound for
    // bounded path enumeration.
    std::vector<double> distance_to(int target) const;

    // Calls `visit` with the edge set and length of every simple
    // source-sink path of length <= bound (all paths when bound is inf).
    void enumerate_simple_paths(double bound,
                                const std::function<void(const Scenario&, double)>& visit) const;

    // Max source-sink flow over the surviving edges.  Undirected edges
    // carry their capacity in both directions.
    double max_flow(const Scenario& surviving) const;

  private:
    struct Endpoints {
        int tail;
        int head;
        double weight;
    };

    std::vector<std::vector<Arc>> adj_;
    std::vector<std::vector<Arc>> radj_;
    std::vector<Endpoints> edges_;  // by edge_id - 1
    int source_ = -1;
    int sink_ = -1;
    int num_edges_ = 0;
    bool directed_ = false;
};

}  // namespace scenbdd
