#include "graph.hpp"

#include <algorithm>
#include <queue>

namespace scenbdd {

GraphView::GraphView(const NetworkInstance& inst) {
    adj_.resize(inst.nodes.size());
    radj_.resize(inst.nodes.size());
    directed_ = inst.directed;
    num_edges_ = inst.num_edges();
    source_ = inst.node_index(inst.source);
    sink_ = inst.node_index(inst.sink);
    for (const Edge& e : inst.edges) {
        int u = inst.node_index(e.tail);
        int v = inst.node_index(e.head);
        edges_.push_back({u, v, e.weight});
        adj_[u].push_back({v, e.id, e.weight});
        radj_[v].push_back({u, e.id, e.weight});
        if (!inst.directed) {
            adj_[v].push_back({u, e.id, e.weight});
            radj_[u].push_back({v, e.id, e.weight});
        }
    }
}

namespace {

double dijkstra(const std::vector<std::vector<GraphView::Arc>>& adj, int from, int to,
                const Scenario* surviving) {
    std::vector<double> dist(adj.size(), kInfDist);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[from] = 0.0;
    heap.push({0.0, from});
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[u]) continue;
        if (u == to) return d;
        for (const auto& arc : adj[u]) {
            if (surviving && !surviving->test(arc.edge_id)) continue;
            double nd = d + arc.weight;
            if (nd < dist[arc.to]) {
                dist[arc.to] = nd;
                heap.push({nd, arc.to});
            }
        }
    }
    return to >= 0 ? dist[to] : kInfDist;
}

}  // namespace

double GraphView::shortest_path(const Scenario& surviving) const {
    return dijkstra(adj_, source_, sink_, &surviving);
}

std::vector<double> GraphView::distance_to(int target) const {
    std::vector<double> dist(radj_.size(), kInfDist);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[target] = 0.0;
    heap.push({0.0, target});
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[u]) continue;
        for (const auto& arc : radj_[u]) {
            double nd = d + arc.weight;
            if (nd < dist[arc.to]) {
                dist[arc.to] = nd;
                heap.push({nd, arc.to});
            }
        }
    }
    return dist;
}

void GraphView::enumerate_simple_paths(
    double bound, const std::function<void(const Scenario&, double)>& visit) const {
    std::vector<double> lb = distance_to(sink_);
    std::vector<char> on_path(adj_.size(), 0);
    Scenario edges(num_edges_);

    // Depth-first backtracking; a branch dies as soon as the admissible
    // bound says no completion can stay within `bound`.
    std::function<void(int, double)> dfs = [&](int u, double len) {
        if (u == sink_) {
            visit(edges, len);
            return;
        }
        for (const auto& arc : adj_[u]) {
            if (on_path[arc.to]) continue;
            double nl = len + arc.weight;
            if (nl + lb[arc.to] > bound) continue;
            on_path[arc.to] = 1;
            edges.set(arc.edge_id);
            dfs(arc.to, nl);
            edges.reset(arc.edge_id);
            on_path[arc.to] = 0;
        }
    };
    on_path[source_] = 1;
    dfs(source_, 0.0);
}

double GraphView::max_flow(const Scenario& surviving) const {
    // Edmonds-Karp on an explicit residual network.  Small graphs only;
    // the enumeration layers above keep instance sizes modest.
    struct RArc {
        int to;
        double cap;
        int rev;
    };
    std::vector<std::vector<RArc>> res(adj_.size());
    auto add_edge = [&](int u, int v, double cap_uv, double cap_vu) {
        res[u].push_back({v, cap_uv, static_cast<int>(res[v].size())});
        res[v].push_back({u, cap_vu, static_cast<int>(res[u].size()) - 1});
    };
    for (int id = 1; id <= num_edges_; ++id) {
        if (!surviving.test(id)) continue;
        const Endpoints& e = edges_[id - 1];
        add_edge(e.tail, e.head, e.weight, directed_ ? 0.0 : e.weight);
    }

    double flow = 0.0;
    const double eps = 1e-12;
    while (true) {
        std::vector<int> prev_node(res.size(), -1), prev_arc(res.size(), -1);
        std::queue<int> q;
        q.push(source_);
        prev_node[source_] = source_;
        while (!q.empty() && prev_node[sink_] == -1) {
            int u = q.front();
            q.pop();
            for (size_t i = 0; i < res[u].size(); ++i) {
                const RArc& a = res[u][i];
                if (a.cap > eps && prev_node[a.to] == -1) {
                    prev_node[a.to] = u;
                    prev_arc[a.to] = static_cast<int>(i);
                    q.push(a.to);
                }
            }
        }
        if (prev_node[sink_] == -1) break;
        double push = kInfDist;
        for (int v = sink_; v != source_; v = prev_node[v]) {
            push = std::min(push, res[prev_node[v]][prev_arc[v]].cap);
        }
        for (int v = sink_; v != source_; v = prev_node[v]) {
            RArc& a = res[prev_node[v]][prev_arc[v]];
            a.cap -= push;
            res[a.to][a.rev].cap += push;
        }
        flow += push;
    }
    return flow;
}

}  // namespace scenbdd
