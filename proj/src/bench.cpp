#include "bench.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "bundle.hpp"
#include "graph.hpp"
#include "recourse.hpp"
#include "textio.hpp"

namespace scenbdd {

namespace {

struct Candidate {
    int a;
    int b;
    double length;
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

NetworkInstance sample_grid_network(int n, std::mt19937_64& rng) {
    const int side = n + 1;
    const int num_nodes = side * side;
    auto id = [side](int i, int j) { return i * side + j; };

    // Grid adjacencies plus cell diagonals, Euclidean lengths.
    std::vector<Candidate> candidates;
    for (int i = 0; i < side; ++i) {
        for (int j = 0; j < side; ++j) {
            if (j + 1 < side) candidates.push_back({id(i, j), id(i, j + 1), 1.0});
            if (i + 1 < side) candidates.push_back({id(i, j), id(i + 1, j), 1.0});
            if (i + 1 < side && j + 1 < side) {
                candidates.push_back({id(i, j), id(i + 1, j + 1), std::sqrt(2.0)});
                candidates.push_back({id(i, j + 1), id(i + 1, j), std::sqrt(2.0)});
            }
        }
    }
    int target_edges = std::min(static_cast<int>(std::lround(1.2 * num_nodes)),
                                static_cast<int>(candidates.size()));

    std::shuffle(candidates.begin(), candidates.end(), rng);
    UnionFind forest(num_nodes);
    std::vector<Candidate> chosen;
    std::vector<Candidate> spare;
    for (const Candidate& c : candidates) {
        if (forest.unite(c.a, c.b)) {
            chosen.push_back(c);
        } else {
            spare.push_back(c);
        }
    }
    for (const Candidate& c : spare) {
        if (static_cast<int>(chosen.size()) >= target_edges) break;
        chosen.push_back(c);
    }

    NetworkInstance inst;
    inst.mode = Mode::ShortestPath;
    inst.directed = false;
    for (int v = 0; v < num_nodes; ++v) inst.nodes.push_back("v" + std::to_string(v));
    for (const Candidate& c : chosen) {
        Edge e;
        e.id = static_cast<int>(inst.edges.size()) + 1;
        e.tail = inst.nodes[c.a];
        e.head = inst.nodes[c.b];
        e.weight = c.length;
        e.p = 0.9;
        e.delta = 0.0;
        e.cost = 1.0;
        e.decidable = false;
        inst.edges.push_back(e);
    }
    inst.source = inst.nodes[0];
    inst.sink = inst.nodes[1];
    return inst;
}

std::string bench_grid(const BenchConfig& config) {
    if (config.n < 1) throw Error::validation("grid parameter n must be >= 1");
    if (config.repetitions < 1) throw Error::validation("repetitions must be >= 1");

    std::mt19937_64 rng(config.seed);
    std::vector<int64_t> sizes;
    int arcs = 0;

    for (int rep = 0; rep < config.repetitions; ++rep) {
        NetworkInstance base = sample_grid_network(config.n, rng);
        arcs = base.num_edges();
        GraphView graph(base);

        const int num_nodes = base.num_nodes();
        for (int a = 0; a < num_nodes; ++a) {
            for (int b = a + 1; b < num_nodes; ++b) {
                NetworkInstance inst = base;
                inst.source = inst.nodes[a];
                inst.sink = inst.nodes[b];

                Scenario full(inst.num_edges());
                for (int e = 1; e <= inst.num_edges(); ++e) full.set(e);
                double dist = GraphView(inst).shortest_path(full);
                if (dist == kInfDist) {
                    throw Error::internal("sampled network is disconnected");
                }
                if (config.alpha_factor > 0.0) {
                    inst.cutoff = config.alpha_factor * dist;
                    inst.penalty = *inst.cutoff + 1.0;
                }

                CriticalLadder ladder = enumerate_shortest_paths(inst);
                CompileOptions options;
                options.per_level_orders = true;
                if (config.node_cap) options.node_cap = config.node_cap;
                BddBundle bundle = compile_bundle(std::move(inst), std::move(ladder), options);
                sizes.push_back(bundle.total_bdd_size());
            }
        }
    }

    std::sort(sizes.begin(), sizes.end());
    auto quantile = [&](double q) {
        size_t rank = static_cast<size_t>(std::ceil(q * static_cast<double>(sizes.size())));
        if (rank == 0) rank = 1;
        return sizes[std::min(rank, sizes.size()) - 1];
    };

    std::string alpha = config.alpha_factor > 0.0 ? fmt_real(config.alpha_factor) : "inf";
    std::string out =
        "n arcs scenarios od-pairs alpha min 25% median 75% 99% max\n";
    out += std::to_string(config.n) + " " + std::to_string(arcs) + " " +
           fmt_real(std::pow(2.0, arcs)) + " " + std::to_string(sizes.size()) + " " + alpha + " " +
           std::to_string(quantile(0.0)) + " " + std::to_string(quantile(0.25)) + " " +
           std::to_string(quantile(0.5)) + " " + std::to_string(quantile(0.75)) + " " +
           std::to_string(quantile(0.99)) + " " + std::to_string(sizes.back()) + "\n";
    return out;
}

}  // namespace scenbdd
