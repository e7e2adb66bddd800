// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails.  Invoked by ctest with --fixtures and --cli.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bench.hpp"
#include "bundle.hpp"
#include "mip.hpp"
#include "oracle.hpp"
#include "recourse.hpp"
#include "textio.hpp"

#include "../support/random_instances.hpp"

using namespace scenbdd;
using scenbdd::testing::RandomInstanceOptions;
using scenbdd::testing::random_instance;

namespace {

std::string g_fixtures;
std::string g_cli;
int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

NetworkInstance fixture(const std::string& name) {
    return read_instance_file(g_fixtures + "/" + name);
}

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Scenario nth_scenario(int width, uint64_t mask) {
    Scenario s(width);
    for (int e = 1; e <= width; ++e) {
        if (mask & (uint64_t{1} << (e - 1))) s.set(e);
    }
    return s;
}

// ---- criterion 1: end-to-end exactness on random instances -------------

void criterion_1() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20260810);
    RandomInstanceOptions opt;
    opt.max_edges = 14;

    const int kInstances = 200;
    int decisions = 0;
    double worst = 0.0;
    bool ok = true;
    std::string failure;

    for (int i = 0; i < kInstances && ok; ++i) {
        NetworkInstance inst = random_instance(rng, opt);
        BddBundle bundle = compile_bundle(inst, enumerate_ladder(inst));
        OracleTable oracle(inst);
        for_each_feasible_decision(inst, 10, [&](const std::vector<uint8_t>& x) {
            double pipeline = evaluate(bundle, x).expected_value;
            double truth = oracle.expected(x);
            double err = std::abs(pipeline - truth);
            worst = std::max(worst, err);
            ++decisions;
            if (err > 1e-9) {
                ok = false;
                failure = "instance " + std::to_string(i) + " x=" + decision_to_string(x) +
                          " error " + fmt_real(err) + "\n" + serialize_instance(inst);
            }
        });
    }
    double secs = elapsed_seconds(start);
    ok = ok && secs <= 300.0;
    report(1, ok,
           "pipeline equals oracle within 1e-9 on " + std::to_string(kInstances) +
               " random instances, " + std::to_string(decisions) + " decisions, max error " +
               fmt_real(worst) + ", " + fmt_real(secs) + "s" +
               (failure.empty() ? "" : "; first failure: " + failure));
}

// ---- criterion 2: linearization exactness ------------------------------

void criterion_2() {
    std::mt19937_64 rng(4452);
    RandomInstanceOptions opt;
    opt.max_edges = 12;

    const int kInstances = 50;
    int checked = 0;
    double worst = 0.0;
    bool ok = true;

    for (int i = 0; i < kInstances && ok; ++i) {
        NetworkInstance inst = random_instance(rng, opt);
        BddBundle bundle = compile_bundle(inst, enumerate_ladder(inst));
        MipModel model = emit_mip(bundle.instance, bundle.ladder, bundle.bdds);
        std::vector<double> p(inst.num_edges()), delta(inst.num_edges());
        for (int e = 0; e < inst.num_edges(); ++e) {
            p[e] = inst.edges[e].p;
            delta[e] = inst.edges[e].delta;
        }
        for_each_feasible_decision(inst, 10, [&](const std::vector<uint8_t>& x) {
            PropagationResult prop = propagate_fixed_decision(model, x);
            for (int level = 0; level < bundle.num_levels(); ++level) {
                double direct = prob_conditioned(bundle.bdds[level], p, delta, x);
                double err = std::abs(prop.level_root[level] - direct);
                worst = std::max(worst, err);
                ++checked;
                if (err > 1e-7) ok = false;
            }
        });
    }
    report(2, ok,
           "fixing x in the emitted model reproduces prob_conditioned within 1e-7 (" +
               std::to_string(checked) + " level evaluations, max error " + fmt_real(worst) + ")");
}

// ---- criterion 3: optimizer agreement (enumeration leg) ----------------

void criterion_3() {
    std::mt19937_64 rng(917);
    RandomInstanceOptions opt;
    opt.max_edges = 12;
    opt.max_decidable = 12;

    const int kInstances = 50;
    double worst = 0.0;
    bool ok = true;

    for (int i = 0; i < kInstances && ok; ++i) {
        NetworkInstance inst = random_instance(rng, opt);
        BddBundle bundle = compile_bundle(inst, enumerate_ladder(inst));
        EnumerationSolution solved = solve_by_enumeration(inst, bundle.ladder, bundle.bdds);
        BestDecision best = oracle_best_decision(inst);
        double err = std::abs(solved.value - best.value);
        worst = std::max(worst, err);
        if (err > 1e-6 || solved.x != best.x) ok = false;
    }
    report(3, ok,
           "solve_by_enumeration matches the oracle optimum on " + std::to_string(kInstances) +
               " instances (max gap " + fmt_real(worst) +
               "); external-solver leg runs in the external_solver ctest");
}

// ---- criterion 4: paper size formulas ----------------------------------

void criterion_4() {
    bool ok = true;
    std::string detail;
    for (const char* name : {"single_edge.inst", "parallel_edges.inst", "triangle.inst",
                             "grid5.inst", "single_arc.inst", "parallel_arcs.inst",
                             "series_arcs.inst", "snip3x3.inst"}) {
        NetworkInstance inst = fixture(name);
        BddBundle bundle = compile_bundle(inst, enumerate_ladder(inst));
        MipModel model = emit_mip(bundle.instance, bundle.ladder, bundle.bdds);
        for (size_t i = 0; i < bundle.bdds.size(); ++i) {
            int64_t v = stats(bundle.bdds[i]).total_size;
            if (model.levels[i].paper_variables != v + inst.num_edges() ||
                model.levels[i].paper_constraints != 4 * v + 1) {
                ok = false;
                detail = std::string(name) + " level " + std::to_string(i);
            }
        }
    }
    // hand-frozen spot values: single edge has |V| = 3, |E| = 1
    {
        NetworkInstance inst = fixture("single_edge.inst");
        BddBundle bundle = compile_bundle(inst, enumerate_ladder(inst));
        MipModel model = emit_mip(bundle.instance, bundle.ladder, bundle.bdds);
        if (model.levels[0].paper_variables != 4 || model.levels[0].paper_constraints != 13) {
            ok = false;
            detail = "single_edge frozen counts";
        }
    }
    report(4, ok, "per-level counters equal |V|+|E| and 4|V|+1 on all fixtures" +
                      (detail.empty() ? "" : " (failed at " + detail + ")"));
}

// ---- criterion 5: BDD canonical-structure suite -------------------------

void criterion_5() {
    int violations = 0;
    std::string detail;

    auto inspect = [&](const std::vector<Scenario>& family, const std::vector<int>& order) {
        Bdd b = compile_monotone(family, order);
        if (!validate_bdd(b).empty()) {
            ++violations;
            detail = "structural: " + validate_bdd(b).front();
        }
        Bdd d = dual_bdd(b);
        Bdd dd = dual_bdd(d);
        if (dd.root != b.root || dd.nodes.size() != b.nodes.size()) ++violations;
        if (stats(d).total_size != stats(b).total_size || stats(d).width != stats(b).width) {
            ++violations;
        }
        if (b.num_vars <= 16) {
            for (uint64_t mask = 0; mask < (uint64_t{1} << b.num_vars); ++mask) {
                Scenario xi = nth_scenario(b.num_vars, mask);
                bool direct = false;
                for (const Scenario& m : family) {
                    if (m.is_subset_of(xi)) {
                        direct = true;
                        break;
                    }
                }
                if (eval(b, xi) != direct) {
                    ++violations;
                    detail = "semantics at mask " + std::to_string(mask);
                    break;
                }
                if (eval(d, xi) != eval(b, xi.complement())) {
                    ++violations;
                    detail = "duality at mask " + std::to_string(mask);
                    break;
                }
            }
        }
    };

    // fixture ladders under every built-in heuristic
    for (const char* name : {"single_edge.inst", "parallel_edges.inst", "triangle.inst",
                             "grid5.inst", "parallel_arcs.inst", "snip3x3.inst"}) {
        NetworkInstance inst = fixture(name);
        CriticalLadder ladder = enumerate_ladder(inst);
        for (auto heuristic : {OrderingHeuristic::OccurrenceAscending,
                               OrderingHeuristic::CuthillMcKeeLike, OrderingHeuristic::Identity}) {
            CompileOptions options;
            options.heuristic = heuristic;
            BddBundle bundle = compile_bundle(inst, ladder, options);
            for (int i = 0; i < bundle.num_levels(); ++i) {
                inspect(bundle.level_families[i], bundle.bdds[i].order);
            }
        }
    }

    // random antichains, including shuffled-input canonicity and a
    // sixteen-variable exhaustive case
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng() % 14);  // up to 16 variables
        std::vector<Scenario> family;
        for (int i = 0; i < 3 + static_cast<int>(rng() % 10); ++i) {
            family.push_back(nth_scenario(n, rng() & ((uint64_t{1} << n) - 1)));
        }
        family = minimize_family(family);
        std::vector<int> order(n);
        for (int e = 1; e <= n; ++e) order[e - 1] = e;
        std::shuffle(order.begin(), order.end(), rng);
        inspect(family, order);

        Bdd reference = compile_monotone(family, order);
        for (int s = 0; s < 3; ++s) {
            std::shuffle(family.begin(), family.end(), rng);
            Bdd again = compile_monotone(family, order);
            bool same = again.root == reference.root && again.nodes.size() == reference.nodes.size();
            for (size_t k = 0; same && k < again.nodes.size(); ++k) {
                same = again.nodes[k].layer == reference.nodes[k].layer &&
                       again.nodes[k].lo == reference.nodes[k].lo &&
                       again.nodes[k].hi == reference.nodes[k].hi;
            }
            if (!same) {
                ++violations;
                detail = "canonicity under shuffling";
            }
        }

        // monotonicity: raising one variable never lowers the value
        if (n <= 12) {
            for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
                Scenario xi = nth_scenario(n, mask);
                if (!eval(reference, xi)) continue;
                for (int e = 1; e <= n; ++e) {
                    Scenario up = xi;
                    up.set(e);
                    if (!eval(reference, up)) {
                        ++violations;
                        detail = "monotonicity";
                    }
                }
            }
        }
    }

    report(5, violations == 0,
           "reducedness, orderedness, canonicity, duality and exhaustive semantics: " +
               std::to_string(violations) + " violations" +
               (detail.empty() ? "" : " (" + detail + ")"));
}

// ---- criterion 6: benchmark order-of-magnitude vs the published table ---

void criterion_6() {
    auto start = std::chrono::steady_clock::now();
    struct Row {
        int n;
        double alpha;  // <= 0 encodes no cutoff
        double published_median;
    };
    const std::vector<Row> rows = {{1, 1.1, 3},  {1, 1.5, 3},  {1, 0.0, 6},
                                   {2, 1.1, 4},  {2, 1.5, 4},  {2, 0.0, 21}};
    bool ok = true;
    std::string detail;
    for (const Row& row : rows) {
        BenchConfig config;
        config.n = row.n;
        config.repetitions = 32;
        config.alpha_factor = row.alpha;
        config.seed = 1;
        std::string table = bench_grid(config);

        // median is the 8th whitespace-separated field of the data row
        std::istringstream in(table);
        std::string header, field;
        std::getline(in, header);
        double median = 0.0;
        for (int i = 0; i < 8; ++i) in >> field;
        median = std::stod(field);

        double ratio = median / row.published_median;
        detail += "n=" + std::to_string(row.n) + " alpha=" +
                  (row.alpha > 0 ? fmt_real(row.alpha) : "inf") + " median " + fmt_real(median) +
                  " vs " + fmt_real(row.published_median) + "; ";
        if (ratio > 3.0 || ratio < 1.0 / 3.0) ok = false;
    }
    double secs = elapsed_seconds(start);
    ok = ok && secs <= 120.0;
    report(6, ok, "medians within 3x of the published grid table (" + detail + fmt_real(secs) + "s)");
}

// ---- criterion 7: SNIP substitute --------------------------------------

void criterion_7() {
    bool ok = true;
    std::string detail;

    // random capacitated interdiction instances against the oracle
    std::mt19937_64 rng(62);
    RandomInstanceOptions opt;
    opt.max_edges = 12;
    opt.force_max_flow = true;
    int decisions = 0;
    for (int i = 0; i < 30 && ok; ++i) {
        NetworkInstance inst = random_instance(rng, opt);
        BddBundle bundle = compile_bundle(inst, enumerate_ladder(inst));
        OracleTable oracle(inst);
        for_each_feasible_decision(inst, 10, [&](const std::vector<uint8_t>& x) {
            ++decisions;
            if (std::abs(evaluate(bundle, x).expected_value - oracle.expected(x)) > 1e-9) {
                ok = false;
                detail = "random SNIP instance " + std::to_string(i);
            }
        });
    }

    // full budget sweep on the grid fixture is monotone non-increasing
    NetworkInstance snip = fixture("snip3x3.inst");
    double previous = std::numeric_limits<double>::infinity();
    std::string sweep;
    for (int budget = 0; budget <= 8; ++budget) {
        NetworkInstance inst = snip;
        inst.budget = budget;
        BddBundle bundle = compile_bundle(inst, enumerate_ladder(inst));
        EnumerationSolution best = solve_by_enumeration(inst, bundle.ladder, bundle.bdds);
        sweep += fmt_real(best.value) + " ";
        if (best.value > previous + 1e-9) {
            ok = false;
            detail = "budget sweep not monotone at budget " + std::to_string(budget);
        }
        previous = best.value;
    }
    report(7, ok,
           "SNIP mode exact on 30 random interdiction instances (" + std::to_string(decisions) +
               " decisions) and grid budget sweep non-increasing: " + sweep +
               (detail.empty() ? "" : "(" + detail + ")"));
}

// ---- criterion 8: byte-identical reruns ---------------------------------

std::string run_cli(const std::string& args, const std::string& out_file) {
    std::string cmd = g_cli + " " + args + " > " + out_file + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    if (rc != 0) return "<exit " + std::to_string(rc) + ">";
    return read_text_file(out_file);
}

void criterion_8() {
    bool ok = true;
    std::string detail;

    // library-level determinism
    {
        NetworkInstance inst = fixture("grid5.inst");
        CriticalLadder ladder = enumerate_ladder(inst);
        if (serialize_ladder(ladder) != serialize_ladder(enumerate_ladder(inst))) {
            ok = false;
            detail += "ladder text; ";
        }
        BddBundle a = compile_bundle(inst, ladder);
        BddBundle b = compile_bundle(inst, ladder);
        for (int i = 0; i < a.num_levels(); ++i) {
            if (dump_bdd(a.bdds[i]) != dump_bdd(b.bdds[i])) {
                ok = false;
                detail += "bdd dump; ";
            }
        }
        if (write_lp(emit_mip(a.instance, a.ladder, a.bdds)) !=
            write_lp(emit_mip(b.instance, b.ladder, b.bdds))) {
            ok = false;
            detail += "lp text; ";
        }
        BenchConfig config;
        config.n = 1;
        config.repetitions = 8;
        config.seed = 3;
        if (bench_grid(config) != bench_grid(config)) {
            ok = false;
            detail += "bench table; ";
        }
    }

    // process-level determinism through the CLI
    if (!g_cli.empty()) {
        std::string tmp = ".";  // ctest runs us inside the build tree
        std::string base = "--instance " + g_fixtures + "/grid5.inst";
        for (const std::string& args :
             {"ladder " + base, "emit " + base, "evaluate " + base,
              std::string("bench-grid --n 1 --reps 8 --seed 5 --alpha-factor 1.5")}) {
            std::string first = run_cli(args, tmp + "/det_a.txt");
            std::string second = run_cli(args, tmp + "/det_b.txt");
            if (first != second || first.find("<exit") == 0) {
                ok = false;
                detail += "cli '" + args.substr(0, args.find(' ')) + "'; ";
            }
        }
    }
    report(8, ok, detail.empty() ? "ladder files, BDD dumps, LP files and benchmark tables are "
                                   "byte-identical across reruns"
                                 : "non-deterministic: " + detail);
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        if (flag == "--fixtures") g_fixtures = argv[i + 1];
        if (flag == "--cli") g_cli = argv[i + 1];
    }
    if (g_fixtures.empty()) {
        std::cerr << "usage: acceptance --fixtures <dir> [--cli <path>]\n";
        return 2;
    }

    try {
        criterion_1();
        criterion_2();
        criterion_3();
        criterion_4();
        criterion_5();
        criterion_6();
        criterion_7();
        criterion_8();
    } catch (const std::exception& e) {
        std::cerr << "acceptance suite aborted: " << e.what() << "\n";
        return 2;
    }
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
