#include "oracle.hpp"

#include <cmath>

#include "graph.hpp"
#include "textio.hpp"
#include "values.hpp"

namespace scenbdd {

OracleTable::OracleTable(const NetworkInstance& inst, int edge_limit) : inst_(inst) {
    const int m = inst.num_edges();
    if (m > edge_limit) {
        throw Error::size_cap("oracle limited to " + std::to_string(edge_limit) + " edges, got " +
                              std::to_string(m));
    }
    GraphView graph(inst);
    values_.resize(uint64_t{1} << m);
    for (uint64_t mask = 0; mask < values_.size(); ++mask) {
        Scenario s(m);
        for (int e = 1; e <= m; ++e) {
            if (mask & (uint64_t{1} << (e - 1))) s.set(e);
        }
        if (inst.mode == Mode::MaxFlow) {
            values_[mask] = graph.max_flow(s);
        } else {
            double d = graph.shortest_path(s);
            bool over = d == kInfDist || (inst.cutoff && d > *inst.cutoff + kCriticalValueTol);
            if (over) {
                if (!inst.penalty) {
                    throw Error::validation(
                        "recourse undefined: scenario " + s.to_string() +
                        " has no admissible path and the instance defines no penalty");
                }
                values_[mask] = *inst.penalty;
            } else {
                values_[mask] = d;
            }
        }
    }
}

double OracleTable::expected(const std::vector<uint8_t>& x) const {
    const int m = inst_.num_edges();
    std::vector<double> p(m);
    for (int e = 1; e <= m; ++e) {
        p[e - 1] = inst_.edges[e - 1].p + (x[e - 1] ? inst_.edges[e - 1].delta : 0.0);
    }
    double expected = 0.0;
    for (uint64_t mask = 0; mask < values_.size(); ++mask) {
        double prob = 1.0;
        for (int e = 1; e <= m; ++e) {
            prob *= (mask & (uint64_t{1} << (e - 1))) ? p[e - 1] : 1.0 - p[e - 1];
        }
        expected += prob * values_[mask];
    }
    return expected;
}

std::map<double, double> OracleTable::distribution(const std::vector<uint8_t>& x) const {
    const int m = inst_.num_edges();
    std::vector<double> p(m);
    for (int e = 1; e <= m; ++e) {
        p[e - 1] = inst_.edges[e - 1].p + (x[e - 1] ? inst_.edges[e - 1].delta : 0.0);
    }
    std::map<double, double> dist;
    ValueClusters clusters;
    for (uint64_t mask = 0; mask < values_.size(); ++mask) {
        double prob = 1.0;
        for (int e = 1; e <= m; ++e) {
            prob *= (mask & (uint64_t{1} << (e - 1))) ? p[e - 1] : 1.0 - p[e - 1];
        }
        dist[clusters.representative(values_[mask])] += prob;
    }
    return dist;
}

std::string OracleTable::csv(const std::vector<uint8_t>& x) const {
    const int m = inst_.num_edges();
    std::vector<double> p(m);
    for (int e = 1; e <= m; ++e) {
        p[e - 1] = inst_.edges[e - 1].p + (x[e - 1] ? inst_.edges[e - 1].delta : 0.0);
    }
    std::string out = "scenario,probability,value\n";
    for (uint64_t mask = 0; mask < values_.size(); ++mask) {
        Scenario s(m);
        double prob = 1.0;
        for (int e = 1; e <= m; ++e) {
            if (mask & (uint64_t{1} << (e - 1))) {
                s.set(e);
                prob *= p[e - 1];
            } else {
                prob *= 1.0 - p[e - 1];
            }
        }
        out += s.to_string() + "," + fmt_real(prob) + "," + fmt_real(values_[mask]) + "\n";
    }
    return out;
}

OracleResult oracle_expected(const NetworkInstance& inst, const std::vector<uint8_t>& x) {
    OracleTable table(inst);
    OracleResult out;
    out.distribution = table.distribution(x);
    out.expected_value = table.expected(x);
    return out;
}

BestDecision oracle_best_decision(const NetworkInstance& inst) {
    OracleTable table(inst);
    BestDecision best;
    bool first = true;
    for_each_feasible_decision(inst, kOracleDecidableLimit, [&](const std::vector<uint8_t>& x) {
        double value = table.expected(x);
        if (first || value < best.value - kTieTol ||
            (value <= best.value + kTieTol && decision_preferred(x, best.x))) {
            best.x = x;
            best.value = value;
            first = false;
        }
    });
    return best;
}

}  // namespace scenbdd
