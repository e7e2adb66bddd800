#pragma once

// Seeded generator of small valid instances for the randomized suites.
// Graphs are spanning-tree-connected with a few extra edges; probabilities,
// shifts, costs and budgets cover the corner values on purpose.

#include <algorithm>
#include <random>
#include <vector>

#include "graph.hpp"
#include "instance.hpp"

namespace scenbdd::testing {

struct RandomInstanceOptions {
    int min_edges = 1;
    int max_edges = 14;
    int max_decidable = 6;
    bool allow_max_flow = true;
    bool force_max_flow = false;
};

inline NetworkInstance random_instance(std::mt19937_64& rng,
                                       const RandomInstanceOptions& opt = {}) {
    auto uniform_int = [&](int lo, int hi) {
        return static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1)) + lo;
    };
    auto uniform_real = [&](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    };

    NetworkInstance inst;
    bool max_flow = opt.force_max_flow || (opt.allow_max_flow && rng() % 5 < 2);
    inst.mode = max_flow ? Mode::MaxFlow : Mode::ShortestPath;
    inst.directed = max_flow || rng() % 4 == 0;

    int num_nodes = uniform_int(2, 6);
    int max_extra = inst.directed ? num_nodes * (num_nodes - 1) : num_nodes * (num_nodes - 1) / 2;
    int num_edges = std::min(uniform_int(std::max(opt.min_edges, num_nodes - 1), opt.max_edges),
                             std::min(opt.max_edges, max_extra + 2));
    for (int v = 0; v < num_nodes; ++v) inst.nodes.push_back("v" + std::to_string(v));

    // Random spanning tree toward node 0, then arbitrary extra edges
    // (parallels allowed, as in multigraph road data).
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < num_nodes; ++v) {
        int u = uniform_int(0, v - 1);
        // orient tree arcs from lower to higher id so that node 0 reaches
        // everything in directed mode
        pairs.push_back({u, v});
    }
    while (static_cast<int>(pairs.size()) < num_edges) {
        int a = uniform_int(0, num_nodes - 1);
        int b = uniform_int(0, num_nodes - 1);
        if (a == b) continue;
        pairs.push_back({a, b});
    }
    pairs.resize(num_edges);

    int decidable_left = opt.max_decidable;
    for (int i = 0; i < num_edges; ++i) {
        Edge e;
        e.id = i + 1;
        e.tail = inst.nodes[pairs[i].first];
        e.head = inst.nodes[pairs[i].second];
        e.weight = max_flow ? uniform_int(1, 5) : uniform_int(1, 8);
        int roll = uniform_int(0, 19);
        if (roll == 0) {
            e.p = 0.0;
        } else if (roll == 1) {
            e.p = 1.0;
        } else {
            e.p = uniform_real(0.05, 0.95);
        }
        if (decidable_left > 0 && rng() % 2 == 0) {
            e.decidable = true;
            --decidable_left;
            double lo = -e.p, hi = 1.0 - e.p;
            e.delta = uniform_int(0, 4) == 0 ? 0.0 : uniform_real(lo, hi);
            e.cost = uniform_int(0, 2) == 0 ? uniform_int(1, 3) : 1.0;
        }
        inst.edges.push_back(e);
    }

    inst.source = inst.nodes[0];
    inst.sink = inst.nodes[num_nodes - 1];

    double total_cost = 0.0;
    for (const Edge& e : inst.edges) {
        if (e.decidable) total_cost += e.cost;
    }
    inst.budget = uniform_int(0, 4) == 0 ? 0.0 : uniform_real(0.0, total_cost + 0.5);

    if (!max_flow) {
        Scenario full(inst.num_edges());
        for (int e = 1; e <= inst.num_edges(); ++e) full.set(e);
        double dist = GraphView(inst).shortest_path(full);
        if (dist != kInfDist && rng() % 2 == 0) {
            inst.cutoff = dist * uniform_real(1.0, 2.5);
        }
        double worst = 0.0;
        for (const Edge& e : inst.edges) worst += e.weight;
        inst.penalty = std::max(worst, inst.cutoff.value_or(0.0)) + uniform_int(10, 100);
    }
    return inst;
}

}  // namespace scenbdd::testing
