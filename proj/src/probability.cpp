#include "probability.hpp"

#include <cmath>

#include "textio.hpp"

namespace scenbdd {

double prob_counted(const Bdd& b, const std::vector<double>& p, size_t* visits) {
    if (static_cast<int>(p.size()) != b.num_vars) {
        throw Error::validation("probability vector size != num_vars");
    }
    for (double q : p) {
        if (q < 0.0 || q > 1.0) throw Error::validation("edge probability out of [0,1]");
    }
    size_t count = 0;
    // The node table lists children before parents, so one ascending pass
    // is a bottom-up evaluation; layer skips need no correction because the
    // skipped factors telescope to one.
    std::vector<double> value(b.nodes.size() + 2);
    value[kFalseRef] = 0.0;
    value[kTrueRef] = 1.0;
    for (size_t i = 0; i < b.nodes.size(); ++i) {
        const BddNode& n = b.nodes[i];
        double pe = p[b.edge_of_layer(n.layer) - 1];
        value[i + 2] = pe * value[n.hi] + (1.0 - pe) * value[n.lo];
        ++count;
    }
    if (visits) *visits = count;
    return value[b.root];
}

double prob(const Bdd& b, const std::vector<double>& p) { return prob_counted(b, p, nullptr); }

std::vector<double> shifted_probabilities(const NetworkInstance& inst,
                                          const std::vector<uint8_t>& x) {
    if (x.size() != inst.edges.size()) {
        throw Error::validation("decision vector length != |E|");
    }
    std::vector<double> p(inst.edges.size());
    for (size_t i = 0; i < inst.edges.size(); ++i) {
        p[i] = inst.edges[i].p + (x[i] ? inst.edges[i].delta : 0.0);
        if (p[i] < 0.0 || p[i] > 1.0) {
            throw Error::validation("shifted probability out of [0,1] on edge " +
                                    std::to_string(i + 1));
        }
    }
    return p;
}

double prob_conditioned(const Bdd& b, const std::vector<double>& p,
                        const std::vector<double>& delta, const std::vector<uint8_t>& x) {
    if (p.size() != delta.size() || p.size() != x.size()) {
        throw Error::validation("p, delta and x must have equal length");
    }
    std::vector<double> shifted(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        shifted[i] = p[i] + (x[i] ? delta[i] : 0.0);
        if (shifted[i] < 0.0 || shifted[i] > 1.0) {
            throw Error::validation("shifted probability out of [0,1] on edge " +
                                    std::to_string(i + 1));
        }
    }
    return prob(b, shifted);
}

ProbabilityReport report(const NetworkInstance& inst, const CriticalLadder& ladder,
                         const std::vector<Bdd>& bdds, const std::vector<uint8_t>& x) {
    if (static_cast<int>(bdds.size()) != ladder.num_levels()) {
        throw Error::validation("one BDD per ladder level required");
    }
    std::vector<double> shifted = shifted_probabilities(inst, x);

    ProbabilityReport out;
    out.penalty_value = inst.penalty;
    double prev = 0.0;
    for (int i = 0; i < ladder.num_levels(); ++i) {
        double c = prob(bdds[i], shifted);
        if (c < prev - kProbTol) {
            throw Error::internal("ladder/BDD mismatch: cumulative probability decreased at level " +
                                  std::to_string(i));
        }
        out.cumulative.push_back(c);
        double eq = c - prev;
        if (eq < -1e-12) {
            throw Error::internal("negative level probability at level " + std::to_string(i));
        }
        out.equality.push_back(eq);
        out.level_values.push_back(ladder.objective_value(i));
        prev = c;
    }
    out.penalty_mass = 1.0 - prev;
    if (out.penalty_mass < 0.0) out.penalty_mass = 0.0;

    double expected = 0.0;
    for (size_t i = 0; i < out.equality.size(); ++i) {
        expected += out.level_values[i] * out.equality[i];
    }
    if (out.penalty_mass > kProbTol) {
        if (!out.penalty_value) {
            throw Error::validation(
                "recourse undefined: residual probability mass but no penalty defined");
        }
        expected += *out.penalty_value * out.penalty_mass;
    } else if (out.penalty_value) {
        expected += *out.penalty_value * out.penalty_mass;
    }
    out.expected_value = expected;
    return out;
}

std::string serialize_report(const ProbabilityReport& report) {
    std::string out;
    for (size_t i = 0; i < report.cumulative.size(); ++i) {
        out += fmt_real(report.level_values[i]) + " " + fmt_real(report.cumulative[i]) + " " +
               fmt_real(report.equality[i]) + "\n";
    }
    if (report.penalty_value) {
        out += "penalty " + fmt_real(*report.penalty_value) + " " + fmt_real(report.penalty_mass) +
               "\n";
    }
    out += "expected " + fmt_real(report.expected_value) + "\n";
    return out;
}

}  // namespace scenbdd
