#include "mip.hpp"

#include <algorithm>
#include <cmath>

#include "decisions.hpp"
#include "textio.hpp"

namespace scenbdd {

int MipModel::num_binaries() const {
    int n = 0;
    for (const MipVariable& v : variables) {
        if (v.binary) ++n;
    }
    return n;
}

namespace {

class ModelBuilder {
  public:
    explicit ModelBuilder(MipModel& model) : model_(model) {}

    int add_variable(std::string name, bool binary, double lb, double ub) {
        model_.variables.push_back({std::move(name), binary, lb, ub});
        return static_cast<int>(model_.variables.size()) - 1;
    }

    int add_row(std::string name, std::vector<MipTerm> terms, RowSense sense, double rhs) {
        model_.constraints.push_back({std::move(name), std::move(terms), sense, rhs});
        return static_cast<int>(model_.constraints.size()) - 1;
    }

  private:
    MipModel& model_;
};

// Child reference as either a variable term or a constant contribution.
struct ChildValue {
    int var = -1;
    double constant = 0.0;
};

}  // namespace

MipModel emit_mip(const NetworkInstance& inst, const CriticalLadder& ladder,
                  const std::vector<Bdd>& bdds) {
    if (static_cast<int>(bdds.size()) != ladder.num_levels()) {
        throw Error::validation("one BDD per ladder level required");
    }
    for (const Bdd& b : bdds) {
        if (b.num_vars != inst.num_edges()) {
            throw Error::validation("BDD variable count != |E|");
        }
        if (b.order != bdds.front().order) {
            throw Error::validation("mixed variable orders across level BDDs");
        }
    }

    MipModel model;
    ModelBuilder build(model);
    const int m = inst.num_edges();

    model.x_var_of_edge.assign(m, -1);
    for (int e = 1; e <= m; ++e) {
        if (inst.edges[e - 1].decidable) {
            model.x_var_of_edge[e - 1] =
                build.add_variable("x" + std::to_string(e), true, 0.0, 1.0);
        }
    }

    for (int i = 0; i < ladder.num_levels(); ++i) {
        const Bdd& b = bdds[i];
        LevelBlock block;
        std::string lv = std::to_string(i);

        std::vector<int> ids = dump_node_ids(b);
        std::vector<int> var_of_node(b.nodes.size(), -1);

        // Node variables by ascending dump id, then their rows in the same
        // order; deterministic and diffable.
        std::vector<size_t> by_id(b.nodes.size());
        for (size_t k = 0; k < b.nodes.size(); ++k) by_id[ids[k] - 1] = k;
        for (size_t k = 0; k < by_id.size(); ++k) {
            var_of_node[by_id[k]] =
                build.add_variable("pa" + lv + "_n" + std::to_string(k + 1), false, 0.0, 1.0);
        }

        auto child_value = [&](NodeRef ref) {
            ChildValue out;
            if (ref == kTrueRef) {
                out.constant = 1.0;
            } else if (ref == kFalseRef) {
                out.constant = 0.0;
            } else {
                out.var = var_of_node[ref - 2];
            }
            return out;
        };

        for (size_t k = 0; k < by_id.size(); ++k) {
            const BddNode& n = b.nodes[by_id[k]];
            const Edge& edge = inst.edges[b.edge_of_layer(n.layer) - 1];
            ChildValue hi = child_value(n.hi);
            ChildValue lo = child_value(n.lo);

            NodeBlock nb;
            nb.var = var_of_node[by_id[k]];
            nb.dump_id = static_cast<int>(k) + 1;
            std::string stem = "c" + lv + "_n" + std::to_string(k + 1);

            // One row: p(u) - a*p(hi) - b*p(lo) [+/- x] <sense> rhs, with
            // terminal children folded into the right-hand side.
            auto node_row = [&](const std::string& name, double a, double bcoef, double x_coeff,
                                RowSense sense, double base_rhs) {
                std::vector<MipTerm> terms;
                terms.push_back({nb.var, 1.0});
                double rhs = base_rhs;
                if (hi.var >= 0) {
                    terms.push_back({hi.var, -a});
                } else {
                    rhs += a * hi.constant;
                }
                if (lo.var >= 0) {
                    terms.push_back({lo.var, -bcoef});
                } else {
                    rhs += bcoef * lo.constant;
                }
                if (x_coeff != 0.0) {
                    terms.push_back({model.x_var_of_edge[edge.id - 1], x_coeff});
                }
                return build.add_row(name, std::move(terms), sense, rhs);
            };

            double p = edge.p;
            double ps = edge.p + edge.delta;
            if (edge.decidable) {
                nb.rows[0] = node_row(stem + "_1", ps, 1.0 - ps, 1.0, RowSense::Le, 1.0);
                nb.rows[1] = node_row(stem + "_2", p, 1.0 - p, -1.0, RowSense::Le, 0.0);
                nb.rows[2] = node_row(stem + "_3", ps, 1.0 - ps, -1.0, RowSense::Ge, -1.0);
                nb.rows[3] = node_row(stem + "_4", p, 1.0 - p, 1.0, RowSense::Ge, 0.0);
                nb.num_rows = 4;
            } else {
                nb.rows[0] = node_row(stem + "_e", p, 1.0 - p, 0.0, RowSense::Eq, 0.0);
                nb.num_rows = 1;
            }
            block.nodes.push_back(nb);
        }

        if (b.degenerate()) {
            block.root_var = -1;
            block.root_const = b.root == kTrueRef ? 1.0 : 0.0;
        } else {
            block.root_var = var_of_node[b.root - 2];
        }

        // First-difference level probability definition.
        block.peq_var = build.add_variable("peq" + lv, false, -1.0, 1.0);
        {
            std::vector<MipTerm> terms{{block.peq_var, 1.0}};
            double rhs = 0.0;
            if (block.root_var >= 0) {
                terms.push_back({block.root_var, -1.0});
            } else {
                rhs += block.root_const;
            }
            if (i > 0) {
                const LevelBlock& prev = model.levels.back();
                if (prev.root_var >= 0) {
                    terms.push_back({prev.root_var, 1.0});
                } else {
                    rhs -= prev.root_const;
                }
            }
            block.peq_row = build.add_row("def_peq" + lv, std::move(terms), RowSense::Eq, rhs);
        }

        // Counters under the convention that keeps the two terminals as
        // variables with their fixing rows: |V| + |E| variables and
        // 4|V| + 1 constraints per level.
        int64_t v = stats(b).total_size;
        block.paper_variables = v + m;
        block.paper_constraints = 4 * v + 1;

        model.levels.push_back(std::move(block));
    }

    if (inst.penalty) {
        model.penalty_var = build.add_variable("peqpen", false, -1.0, 1.0);
        std::vector<MipTerm> terms{{model.penalty_var, 1.0}};
        double rhs = 1.0;
        if (!model.levels.empty()) {
            const LevelBlock& last = model.levels.back();
            if (last.root_var >= 0) {
                terms.push_back({last.root_var, 1.0});
            } else {
                rhs -= last.root_const;
            }
        }
        model.penalty_row = build.add_row("def_peqpen", std::move(terms), RowSense::Eq, rhs);
    }

    {
        std::vector<MipTerm> terms;
        for (int e = 1; e <= m; ++e) {
            if (model.x_var_of_edge[e - 1] >= 0) {
                terms.push_back({model.x_var_of_edge[e - 1], inst.edges[e - 1].cost});
            }
        }
        if (!terms.empty()) {
            model.budget_row = build.add_row("budget", std::move(terms), RowSense::Le, inst.budget);
        }
    }

    for (int i = 0; i < ladder.num_levels(); ++i) {
        model.objective.push_back({model.levels[i].peq_var, ladder.objective_value(i)});
    }
    if (model.penalty_var >= 0) {
        model.objective.push_back({model.penalty_var, *inst.penalty});
    }
    return model;
}

namespace {

void append_term(std::string& line, std::string& out, double coeff, const std::string& name,
                 bool first) {
    std::string tok;
    if (first) {
        tok = (coeff < 0 ? "-" : "") + fmt_real(std::abs(coeff)) + " " + name;
    } else {
        tok = (coeff < 0 ? "- " : "+ ") + fmt_real(std::abs(coeff)) + " " + name;
    }
    if (line.size() + tok.size() > 200) {
        out += line + "\n";
        line = "   ";
    }
    line += " " + tok;
}

}  // namespace

std::string write_lp(const MipModel& model) {
    std::string out = "\\ exact scenario-aggregation reformulation\n";
    out += "Minimize\n";
    std::string line = " obj:";
    bool first = true;
    for (const MipTerm& t : model.objective) {
        append_term(line, out, t.coeff, model.variables[t.var].name, first);
        first = false;
    }
    out += line + "\n";

    if (!model.constraints.empty()) {
        out += "Subject To\n";
        for (const MipConstraint& c : model.constraints) {
            line = " " + c.name + ":";
            first = true;
            for (const MipTerm& t : c.terms) {
                append_term(line, out, t.coeff, model.variables[t.var].name, first);
                first = false;
            }
            const char* sense = c.sense == RowSense::Le ? "<=" : c.sense == RowSense::Ge ? ">=" : "=";
            out += line + " " + sense + " " + fmt_real(c.rhs) + "\n";
        }
    }

    out += "Bounds\n";
    for (const MipVariable& v : model.variables) {
        if (v.binary) continue;
        out += " " + fmt_real(v.lb) + " <= " + v.name + " <= " + fmt_real(v.ub) + "\n";
    }

    bool any_binary = false;
    for (const MipVariable& v : model.variables) {
        if (v.binary) {
            if (!any_binary) out += "Binaries\n";
            any_binary = true;
            out += " " + v.name + "\n";
        }
    }
    out += "End\n";
    return out;
}

uint64_t constraint_pattern_hash(const MipModel& model) {
    uint64_t h = 14695981039346656037ull;
    auto mix = [&h](uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    auto mix_string = [&](const std::string& s) {
        for (char c : s) mix(static_cast<unsigned char>(c));
        mix(0xff);
    };
    for (const MipVariable& v : model.variables) {
        mix_string(v.name);
        mix(v.binary ? 1 : 2);
    }
    for (const MipConstraint& c : model.constraints) {
        mix_string(c.name);
        mix(static_cast<uint64_t>(c.sense) + 10);
        for (const MipTerm& t : c.terms) mix(static_cast<uint64_t>(t.var) + 100);
    }
    for (const MipTerm& t : model.objective) mix(static_cast<uint64_t>(t.var) + 100);
    return h;
}

PropagationResult propagate_fixed_decision(const MipModel& model, const std::vector<uint8_t>& x) {
    if (x.size() != model.x_var_of_edge.size()) {
        throw Error::validation("decision vector length != |E|");
    }
    std::vector<double> value(model.variables.size(), 0.0);
    std::vector<char> known(model.variables.size(), 0);
    for (size_t e = 0; e < x.size(); ++e) {
        int var = model.x_var_of_edge[e];
        if (var >= 0) {
            value[var] = x[e];
            known[var] = 1;
        } else if (x[e]) {
            throw Error::validation("decision selects non-decidable edge " + std::to_string(e + 1));
        }
    }

    // Evaluates one row for the unknown `self` variable assuming all other
    // terms are known; returns the implied bound (or exact value).
    auto solve_row = [&](int row, int self) {
        const MipConstraint& c = model.constraints[row];
        double rest = 0.0;
        double self_coeff = 0.0;
        for (const MipTerm& t : c.terms) {
            if (t.var == self) {
                self_coeff = t.coeff;
                continue;
            }
            if (!known[t.var]) throw Error::internal("propagation hit unknown variable");
            rest += t.coeff * value[t.var];
        }
        if (self_coeff == 0.0) throw Error::internal("row does not contain its node variable");
        return (c.rhs - rest) / self_coeff;
    };

    PropagationResult out;
    for (const LevelBlock& level : model.levels) {
        // Children carry larger dump ids, so the reverse of the stored
        // order is a bottom-up pass.
        for (auto it = level.nodes.rbegin(); it != level.nodes.rend(); ++it) {
            const NodeBlock& nb = *it;
            double v;
            if (nb.num_rows == 1) {
                v = solve_row(nb.rows[0], nb.var);
            } else {
                double ub = std::min(solve_row(nb.rows[0], nb.var), solve_row(nb.rows[1], nb.var));
                double lb = std::max(solve_row(nb.rows[2], nb.var), solve_row(nb.rows[3], nb.var));
                if (std::abs(ub - lb) > 1e-9) {
                    throw Error::internal("four-inequality block does not pin the node value (gap " +
                                          fmt_real(ub - lb) + ")");
                }
                v = ub;
            }
            value[nb.var] = v;
            known[nb.var] = 1;
        }
        out.level_root.push_back(level.root_var >= 0 ? value[level.root_var] : level.root_const);
        double peq = solve_row(level.peq_row, level.peq_var);
        value[level.peq_var] = peq;
        known[level.peq_var] = 1;
        out.peq.push_back(peq);
    }
    if (model.penalty_var >= 0) {
        out.peq_penalty = solve_row(model.penalty_row, model.penalty_var);
        value[model.penalty_var] = out.peq_penalty;
        known[model.penalty_var] = 1;
    }
    double obj = 0.0;
    for (const MipTerm& t : model.objective) obj += t.coeff * value[t.var];
    out.objective = obj;

    if (model.budget_row >= 0) {
        const MipConstraint& c = model.constraints[model.budget_row];
        double lhs = 0.0;
        for (const MipTerm& t : c.terms) lhs += t.coeff * value[t.var];
        if (lhs > c.rhs + 1e-9) {
            throw Error::validation("decision violates the budget constraint");
        }
    }
    return out;
}

EnumerationSolution solve_by_enumeration(const NetworkInstance& inst, const CriticalLadder& ladder,
                                         const std::vector<Bdd>& bdds, int max_decidable) {
    EnumerationSolution best;
    bool first = true;
    for_each_feasible_decision(inst, max_decidable, [&](const std::vector<uint8_t>& x) {
        double value = report(inst, ladder, bdds, x).expected_value;
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
