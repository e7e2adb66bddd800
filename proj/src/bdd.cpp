#include "bdd.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>
#include <unordered_map>

#include "error.hpp"

namespace scenbdd {

namespace {

void require_permutation(const std::vector<int>& order, int num_edges) {
    if (static_cast<int>(order.size()) != num_edges) {
        throw Error::validation("order must list all " + std::to_string(num_edges) + " edges");
    }
    std::vector<char> seen(num_edges + 1, 0);
    for (int e : order) {
        if (e < 1 || e > num_edges || seen[e]) {
            throw Error::validation("order is not a permutation of 1..|E|");
        }
        seen[e] = 1;
    }
}

}  // namespace

std::vector<int> order_edges(int num_edges, const std::vector<Scenario>& family,
                             OrderingHeuristic heuristic,
                             const std::vector<int>* explicit_order) {
    switch (heuristic) {
        case OrderingHeuristic::Identity: {
            std::vector<int> order(num_edges);
            for (int e = 1; e <= num_edges; ++e) order[e - 1] = e;
            return order;
        }
        case OrderingHeuristic::Explicit: {
            if (!explicit_order) throw Error::validation("explicit order missing");
            require_permutation(*explicit_order, num_edges);
            return *explicit_order;
        }
        case OrderingHeuristic::OccurrenceAscending: {
            if (family.empty()) {
                throw Error::validation("occurrence ordering needs a nonempty scenario family");
            }
            std::vector<int> count(num_edges + 1, 0);
            for (const Scenario& s : family) {
                for (int e = 1; e <= num_edges; ++e) {
                    if (s.test(e)) ++count[e];
                }
            }
            std::vector<int> order(num_edges);
            for (int e = 1; e <= num_edges; ++e) order[e - 1] = e;
            std::stable_sort(order.begin(), order.end(),
                             [&](int a, int b) { return count[a] < count[b]; });
            return order;
        }
        case OrderingHeuristic::CuthillMcKeeLike:
            break;
    }

    // Cuthill-McKee-like breadth-first ordering of the edge co-occurrence
    // graph.  Edges appearing in no scenario go first (don't cares); each
    // component starts at its minimum-degree vertex and expands neighbors
    // in ascending degree.
    std::vector<std::vector<char>> adj(num_edges + 1, std::vector<char>(num_edges + 1, 0));
    std::vector<int> occurrences(num_edges + 1, 0);
    for (const Scenario& s : family) {
        std::vector<int> members;
        for (int e = 1; e <= num_edges; ++e) {
            if (s.test(e)) {
                members.push_back(e);
                ++occurrences[e];
            }
        }
        for (size_t i = 0; i < members.size(); ++i) {
            for (size_t j = i + 1; j < members.size(); ++j) {
                adj[members[i]][members[j]] = adj[members[j]][members[i]] = 1;
            }
        }
    }
    std::vector<int> degree(num_edges + 1, 0);
    for (int a = 1; a <= num_edges; ++a) {
        for (int b = 1; b <= num_edges; ++b) degree[a] += adj[a][b];
    }

    std::vector<int> order;
    std::vector<char> placed(num_edges + 1, 0);
    for (int e = 1; e <= num_edges; ++e) {
        if (occurrences[e] == 0) {
            order.push_back(e);
            placed[e] = 1;
        }
    }
    auto by_degree_then_index = [&](int a, int b) {
        return degree[a] != degree[b] ? degree[a] < degree[b] : a < b;
    };
    while (static_cast<int>(order.size()) < num_edges) {
        int start = -1;
        for (int e = 1; e <= num_edges; ++e) {
            if (!placed[e] && (start == -1 || by_degree_then_index(e, start))) start = e;
        }
        std::vector<int> queue{start};
        placed[start] = 1;
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            order.push_back(u);
            std::vector<int> next;
            for (int v = 1; v <= num_edges; ++v) {
                if (adj[u][v] && !placed[v]) next.push_back(v);
            }
            std::sort(next.begin(), next.end(), by_degree_then_index);
            for (int v : next) {
                placed[v] = 1;
                queue.push_back(v);
            }
        }
    }
    return order;
}

namespace {

struct FamilyKey {
    std::vector<Scenario> sets;

    bool operator==(const FamilyKey& other) const { return sets == other.sets; }
};

struct FamilyKeyHash {
    size_t operator()(const FamilyKey& key) const {
        size_t h = 0x9e3779b97f4a7c15ull;
        for (const Scenario& s : key.sets) h = h * 1099511628211ull ^ s.hash();
        return h;
    }
};

struct TripleHash {
    size_t operator()(const std::tuple<int, NodeRef, NodeRef>& t) const {
        auto [layer, lo, hi] = t;
        size_t h = std::hash<int>{}(layer);
        h = h * 1000003u ^ std::hash<int32_t>{}(lo);
        h = h * 1000003u ^ std::hash<int32_t>{}(hi);
        return h;
    }
};

class Compiler {
  public:
    Compiler(const std::vector<int>& order, uint64_t node_cap)
        : order_(order), node_cap_(node_cap) {}

    NodeRef build(FamilyKey family, int layer) {
        // Constant subfunctions: no minimal true point left means false;
        // the empty set as a minimal true point means true.
        if (family.sets.empty()) return kFalseRef;
        if (family.sets.front().empty()) return kTrueRef;
        auto memo = memo_.find(family);
        if (memo != memo_.end()) return memo->second;

        // Advance to the first layer whose edge actually occurs; the
        // layers in between are don't-cares and create no nodes.
        int branch_layer = layer;
        int edge = 0;
        while (true) {
            edge = order_[branch_layer - 1];
            bool occurs = false;
            for (const Scenario& s : family.sets) {
                if (s.test(edge)) {
                    occurs = true;
                    break;
                }
            }
            if (occurs) break;
            ++branch_layer;
        }

        FamilyKey lo_family, hi_family;
        for (const Scenario& s : family.sets) {
            if (!s.test(edge)) {
                lo_family.sets.push_back(s);
                hi_family.sets.push_back(s);
            } else {
                Scenario reduced = s;
                reduced.reset(edge);
                hi_family.sets.push_back(std::move(reduced));
            }
        }
        hi_family.sets = minimize_family(std::move(hi_family.sets));

        NodeRef lo = build(std::move(lo_family), branch_layer + 1);
        NodeRef hi = build(std::move(hi_family), branch_layer + 1);
        NodeRef out = make_node(branch_layer, lo, hi);
        memo_.emplace(std::move(family), out);
        return out;
    }

    std::vector<BddNode> take_nodes() { return std::move(nodes_); }

  private:
    NodeRef make_node(int layer, NodeRef lo, NodeRef hi) {
        if (lo == hi) return lo;
        auto key = std::make_tuple(layer, lo, hi);
        auto it = unique_.find(key);
        if (it != unique_.end()) return it->second;
        if (nodes_.size() >= node_cap_) {
            throw Error::size_cap("BDD node cap exceeded: " + std::to_string(nodes_.size()) +
                                  " nodes at layer " + std::to_string(layer) + " (cap " +
                                  std::to_string(node_cap_) + ")");
        }
        nodes_.push_back({layer, lo, hi});
        NodeRef ref = static_cast<NodeRef>(nodes_.size()) + 1;
        unique_.emplace(key, ref);
        return ref;
    }

    const std::vector<int>& order_;
    uint64_t node_cap_;
    std::vector<BddNode> nodes_;
    std::unordered_map<FamilyKey, NodeRef, FamilyKeyHash> memo_;
    std::unordered_map<std::tuple<int, NodeRef, NodeRef>, NodeRef, TripleHash> unique_;
};

}  // namespace

Bdd compile_monotone(const std::vector<Scenario>& min_true_points, const std::vector<int>& order,
                     uint64_t node_cap) {
    int num_vars = static_cast<int>(order.size());
    require_permutation(order, num_vars);
    for (const Scenario& s : min_true_points) {
        if (s.width() != num_vars) {
            throw Error::validation("scenario width does not match the variable order");
        }
    }
    if (!is_antichain(min_true_points)) {
        throw Error::validation("min_true_points is not an antichain");
    }

    Bdd b;
    b.num_vars = num_vars;
    b.order = order;

    FamilyKey root_family;
    root_family.sets = min_true_points;
    std::sort(root_family.sets.begin(), root_family.sets.end());

    Compiler compiler(b.order, node_cap);
    b.root = compiler.build(std::move(root_family), 1);
    b.nodes = compiler.take_nodes();
    return b;
}

Bdd dual_bdd(const Bdd& b) {
    Bdd out = b;
    for (BddNode& n : out.nodes) std::swap(n.lo, n.hi);
    return out;
}

bool eval(const Bdd& b, const Scenario& xi) {
    if (xi.width() != b.num_vars) throw Error::validation("scenario width != num_vars");
    NodeRef ref = b.root;
    while (ref >= 2) {
        const BddNode& n = b.node(ref);
        ref = xi.test(b.edge_of_layer(n.layer)) ? n.hi : n.lo;
    }
    return ref == kTrueRef;
}

BddStats stats(const Bdd& b) {
    BddStats out;
    out.layer_widths.assign(b.num_vars, 0);
    if (b.degenerate()) {
        out.total_size = 1;
        return out;
    }
    for (const BddNode& n : b.nodes) ++out.layer_widths[n.layer - 1];
    out.width = *std::max_element(out.layer_widths.begin(), out.layer_widths.end());
    out.total_size = static_cast<int64_t>(b.nodes.size()) + 2;
    return out;
}

std::vector<std::string> validate_bdd(const Bdd& b) {
    std::vector<std::string> out;
    if (static_cast<int>(b.order.size()) != b.num_vars) out.push_back("order size != num_vars");
    if (b.root < 0 || b.root >= static_cast<NodeRef>(b.nodes.size()) + 2) {
        out.push_back("root reference out of range");
        return out;
    }
    std::map<std::tuple<int, NodeRef, NodeRef>, int> triples;
    for (size_t i = 0; i < b.nodes.size(); ++i) {
        const BddNode& n = b.nodes[i];
        NodeRef self = static_cast<NodeRef>(i) + 2;
        std::string tag = "node " + std::to_string(self);
        if (n.layer < 1 || n.layer > b.num_vars) out.push_back(tag + ": layer out of range");
        if (n.lo == n.hi) out.push_back(tag + ": redundant (lo == hi)");
        for (NodeRef child : {n.lo, n.hi}) {
            if (child < 0 || child >= static_cast<NodeRef>(b.nodes.size()) + 2) {
                out.push_back(tag + ": child reference out of range");
            } else if (child >= 2) {
                if (child >= self) out.push_back(tag + ": child does not precede parent");
                if (b.nodes[child - 2].layer <= n.layer) {
                    out.push_back(tag + ": arc does not extend to a higher layer");
                }
            }
        }
        if (++triples[{n.layer, n.lo, n.hi}] > 1) {
            out.push_back(tag + ": duplicate (layer, lo, hi) triple");
        }
    }
    return out;
}

std::vector<int> dump_node_ids(const Bdd& b) {
    std::vector<NodeRef> postorder;
    std::vector<char> seen(b.nodes.size() + 2, 0);
    std::function<void(NodeRef)> walk = [&](NodeRef ref) {
        if (ref < 2 || seen[ref]) return;
        seen[ref] = 1;
        walk(b.node(ref).lo);
        walk(b.node(ref).hi);
        postorder.push_back(ref);
    };
    walk(b.root);

    std::vector<int> id(b.nodes.size(), 0);
    int next = 1;
    for (auto it = postorder.rbegin(); it != postorder.rend(); ++it) id[*it - 2] = next++;
    return id;
}

std::string dump_bdd(const Bdd& b) {
    std::vector<int> id = dump_node_ids(b);

    auto name = [&](NodeRef ref) {
        if (ref == kFalseRef) return std::string("F");
        if (ref == kTrueRef) return std::string("T");
        return std::to_string(id[ref - 2]);
    };

    // List nodes by ascending dump id.
    std::vector<NodeRef> by_id(b.nodes.size() + 1, -1);
    for (size_t i = 0; i < b.nodes.size(); ++i) {
        if (id[i] > 0) by_id[id[i]] = static_cast<NodeRef>(i) + 2;
    }

    std::string out = "vars " + std::to_string(b.num_vars) + "\norder";
    for (int e : b.order) out += " " + std::to_string(e);
    out += "\nroot " + name(b.root) + "\n";
    for (size_t k = 1; k < by_id.size(); ++k) {
        if (by_id[k] < 0) continue;
        const BddNode& n = b.node(by_id[k]);
        out += std::to_string(k) + " " + std::to_string(b.edge_of_layer(n.layer)) + " " +
               name(n.lo) + " " + name(n.hi) + "\n";
    }
    return out;
}

int incidence_bandwidth(const std::vector<Scenario>& family, const std::vector<int>& order) {
    std::vector<int> position(order.size() + 1, 0);
    for (size_t k = 0; k < order.size(); ++k) position[order[k]] = static_cast<int>(k) + 1;
    int bandwidth = 0;
    for (const Scenario& s : family) {
        int lo = 0, hi = 0;
        for (int e = 1; e <= s.width(); ++e) {
            if (!s.test(e)) continue;
            int pos = position[e];
            if (lo == 0 || pos < lo) lo = pos;
            if (pos > hi) hi = pos;
        }
        if (lo != 0) bandwidth = std::max(bandwidth, hi - lo + 1);
    }
    return bandwidth;
}

}  // namespace scenbdd
