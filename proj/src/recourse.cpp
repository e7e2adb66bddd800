#include "recourse.hpp"

#include <algorithm>
#include <cmath>

#include "graph.hpp"

namespace scenbdd {

CriticalLadder enumerate_shortest_paths(const NetworkInstance& inst) {
    GraphView graph(inst);
    double bound = inst.cutoff ? *inst.cutoff : kInfDist;

    std::map<double, std::vector<Scenario>> classes;
    ValueClusters clusters;
    graph.enumerate_simple_paths(bound, [&](const Scenario& edges, double length) {
        classes[clusters.representative(length)].push_back(edges);
    });

    if (classes.empty() && !inst.penalty) {
        throw Error::validation(
            "recourse undefined: no source-sink path within the cutoff and no penalty given");
    }

    std::optional<double> penalty_alpha;
    if (inst.cutoff) penalty_alpha = *inst.penalty;
    CriticalLadder ladder = build_ladder(inst.num_edges(), Mode::ShortestPath, classes,
                                         penalty_alpha);
    return ladder;
}

CriticalLadder enumerate_flow_levels(const NetworkInstance& inst, int oracle_limit) {
    const int m = inst.num_edges();
    if (m > oracle_limit) {
        throw Error::size_cap("max-flow ladder enumeration is brute force and limited to " +
                              std::to_string(oracle_limit) +
                              " edges; supply an external ladder file for larger instances");
    }
    GraphView graph(inst);

    // Flow value of every scenario, then the minimal scenarios per exact
    // value: minimality only needs the immediate subsets because the flow
    // value is monotone under edge removal.
    const uint64_t count = uint64_t{1} << m;
    std::vector<double> value(count);
    for (uint64_t mask = 0; mask < count; ++mask) {
        Scenario s(m);
        for (int e = 1; e <= m; ++e) {
            if (mask & (uint64_t{1} << (e - 1))) s.set(e);
        }
        value[mask] = graph.max_flow(s);
    }

    std::map<double, std::vector<Scenario>> classes;
    ValueClusters clusters;
    for (uint64_t mask = 0; mask < count; ++mask) {
        bool minimal = true;
        for (int e = 1; e <= m && minimal; ++e) {
            uint64_t bit = uint64_t{1} << (e - 1);
            if ((mask & bit) && value[mask ^ bit] >= value[mask] - kCriticalValueTol) minimal = false;
        }
        if (mask == 0) minimal = true;  // the empty scenario anchors the bottom value
        if (!minimal) continue;
        Scenario s(m);
        for (int e = 1; e <= m; ++e) {
            if (mask & (uint64_t{1} << (e - 1))) s.set(e);
        }
        classes[clusters.representative(-value[mask])].push_back(s);
    }

    return build_ladder(m, Mode::MaxFlow, classes, std::nullopt);
}

CriticalLadder enumerate_ladder(const NetworkInstance& inst) {
    return inst.mode == Mode::ShortestPath ? enumerate_shortest_paths(inst)
                                           : enumerate_flow_levels(inst);
}

}  // namespace scenbdd
