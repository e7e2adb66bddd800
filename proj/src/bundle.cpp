#include "bundle.hpp"

#include "error.hpp"

namespace scenbdd {

int64_t BddBundle::total_bdd_size() const {
    int64_t total = 0;
    for (const Bdd& b : bdds) total += stats(b).total_size;
    return total;
}

BddBundle compile_bundle(NetworkInstance inst, CriticalLadder ladder,
                         const CompileOptions& options) {
    if (ladder.num_edges != inst.num_edges()) {
        throw Error::validation("ladder edge count != instance |E|");
    }
    auto violations = validate_ladder(ladder);
    if (!violations.empty()) {
        std::string msg = "invalid ladder:";
        for (const auto& v : violations) msg += "\n  " + v;
        throw Error::validation(msg);
    }

    BddBundle bundle;
    bundle.instance = std::move(inst);
    bundle.ladder = std::move(ladder);

    for (int i = 0; i < bundle.ladder.num_levels(); ++i) {
        bundle.level_families.push_back(bundle.ladder.cumulative_family(i));
    }

    if (!options.per_level_orders) {
        // One global order across all levels, computed from the occurrence
        // counts of every level's scenarios; required for model emission.
        std::vector<Scenario> all;
        for (const Level& level : bundle.ladder.levels) {
            all.insert(all.end(), level.min_true_points.begin(), level.min_true_points.end());
        }
        if (all.empty() && options.heuristic == OrderingHeuristic::OccurrenceAscending) {
            bundle.shared_order = order_edges(bundle.instance.num_edges(), all,
                                              OrderingHeuristic::Identity);
        } else {
            bundle.shared_order =
                order_edges(bundle.instance.num_edges(), all, options.heuristic,
                            options.heuristic == OrderingHeuristic::Explicit
                                ? &options.explicit_order
                                : nullptr);
        }
        for (const auto& family : bundle.level_families) {
            bundle.bdds.push_back(compile_monotone(family, bundle.shared_order, options.node_cap));
        }
    } else {
        for (const auto& family : bundle.level_families) {
            std::vector<int> order =
                order_edges(bundle.instance.num_edges(), family, options.heuristic,
                            options.heuristic == OrderingHeuristic::Explicit
                                ? &options.explicit_order
                                : nullptr);
            bundle.bdds.push_back(compile_monotone(family, order, options.node_cap));
        }
    }
    return bundle;
}

ProbabilityReport evaluate(const BddBundle& bundle, const std::vector<uint8_t>& x) {
    return report(bundle.instance, bundle.ladder, bundle.bdds, x);
}

}  // namespace scenbdd
