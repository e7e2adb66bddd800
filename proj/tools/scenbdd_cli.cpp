// Command-line front end for the scenario-BDD engine.  Only talks to the
// shared library through the C API.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scenbdd.h"

namespace {

// Exit codes: 0 success, 1 validation error, 2 size-cap abort, 3 internal
// invariant failure.
int exit_code(scenbdd_status status) {
    switch (status) {
        case SCENBDD_OK:
            return 0;
        case SCENBDD_ERR_SIZE_CAP:
            return 2;
        case SCENBDD_ERR_INTERNAL:
            return 3;
        default:
            return 1;
    }
}

[[noreturn]] void die(scenbdd_status status) {
    std::cerr << "error: " << scenbdd_last_error() << "\n";
    std::exit(exit_code(status));
}

void check(scenbdd_status status) {
    if (status != SCENBDD_OK) die(status);
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    scenbdd_string_free(s);
    return out;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        std::exit(1);
    }
    out << content;
}

struct Handles {
    scenbdd_instance* instance = nullptr;
    scenbdd_ladder* ladder = nullptr;
    scenbdd_bundle* bundle = nullptr;

    ~Handles() {
        scenbdd_bundle_free(bundle);
        scenbdd_ladder_free(ladder);
        scenbdd_instance_free(instance);
    }
};

struct CommonOptions {
    std::string instance_path;
    std::string ladder_path;
    std::string order = "occ";
    std::string order_file;
    std::string out_path;
    std::string x_bits;
    uint64_t node_cap = 0;
};

// SCENBDD_NODE_CAP in the environment overrides any configured cap.
uint64_t effective_node_cap(uint64_t flag_value) {
    if (const char* env = std::getenv("SCENBDD_NODE_CAP")) {
        return std::strtoull(env, nullptr, 10);
    }
    return flag_value;
}

void load_instance(Handles& h, const CommonOptions& opt) {
    check(scenbdd_instance_read(opt.instance_path.c_str(), &h.instance));
}

void load_ladder(Handles& h, const CommonOptions& opt) {
    if (opt.ladder_path.empty()) {
        check(scenbdd_ladder_enumerate(h.instance, &h.ladder));
    } else {
        check(scenbdd_ladder_read(h.instance, opt.ladder_path.c_str(), &h.ladder));
    }
}

void compile_bundle(Handles& h, const CommonOptions& opt) {
    scenbdd_order_kind kind = SCENBDD_ORDER_OCCURRENCE;
    std::vector<int> explicit_order;
    if (opt.order == "occ") {
        kind = SCENBDD_ORDER_OCCURRENCE;
    } else if (opt.order == "cmk") {
        kind = SCENBDD_ORDER_CUTHILL_MCKEE;
    } else if (opt.order == "id") {
        kind = SCENBDD_ORDER_IDENTITY;
    } else if (opt.order == "file") {
        kind = SCENBDD_ORDER_EXPLICIT;
        std::ifstream in(opt.order_file);
        if (!in) {
            std::cerr << "error: cannot read order file " << opt.order_file << "\n";
            std::exit(1);
        }
        int e;
        while (in >> e) explicit_order.push_back(e);
        if (static_cast<int>(explicit_order.size()) != scenbdd_instance_num_edges(h.instance)) {
            std::cerr << "error: order file must list all " <<
                scenbdd_instance_num_edges(h.instance) << " edges\n";
            std::exit(1);
        }
    } else {
        std::cerr << "error: --order must be occ, cmk, id or file\n";
        std::exit(1);
    }
    check(scenbdd_compile(h.instance, h.ladder, kind,
                          explicit_order.empty() ? nullptr : explicit_order.data(),
                          effective_node_cap(opt.node_cap), &h.bundle));
}

int cmd_ladder(const CommonOptions& opt) {
    Handles h;
    load_instance(h, opt);
    load_ladder(h, opt);

    char* text = nullptr;
    check(scenbdd_ladder_format(h.ladder, &text));
    std::string serialized = take_string(text);
    if (!opt.out_path.empty()) write_output(opt.out_path, serialized);

    int levels = scenbdd_ladder_num_levels(h.ladder);
    std::cout << "levels " << levels << "\n";
    for (int i = 0; i < levels; ++i) {
        double value = 0.0;
        int size = 0;
        check(scenbdd_ladder_value(h.ladder, i, &value));
        check(scenbdd_ladder_level_size(h.ladder, i, &size));
        std::cout << "level " << i << " value " << value << " scenarios " << size << "\n";
    }
    if (scenbdd_ladder_has_penalty(h.ladder)) std::cout << "penalty level present\n";
    if (opt.out_path.empty()) std::cout << serialized;
    return 0;
}

int cmd_compile(const CommonOptions& opt) {
    Handles h;
    load_instance(h, opt);
    load_ladder(h, opt);
    compile_bundle(h, opt);

    int levels = scenbdd_bundle_num_levels(h.bundle);
    std::cout << "level value size width bandwidth\n";
    for (int i = 0; i < levels; ++i) {
        double value = 0.0;
        int64_t size = 0;
        int width = 0, bandwidth = 0;
        check(scenbdd_ladder_value(h.ladder, i, &value));
        check(scenbdd_bundle_size(h.bundle, i, &size));
        check(scenbdd_bundle_width(h.bundle, i, &width));
        check(scenbdd_bundle_bandwidth(h.bundle, i, &bandwidth));
        std::cout << i << " " << value << " " << size << " " << width << " " << bandwidth
                  << "\n";

        if (!opt.out_path.empty()) {
            char* dump = nullptr;
            check(scenbdd_bundle_dump(h.bundle, i, &dump));
            std::filesystem::create_directories(opt.out_path);
            write_output(opt.out_path + "/level" + std::to_string(i) + ".bdd",
                         take_string(dump));
        }
    }
    return 0;
}

int cmd_evaluate(const CommonOptions& opt) {
    Handles h;
    load_instance(h, opt);
    load_ladder(h, opt);
    compile_bundle(h, opt);

    char* report = nullptr;
    double expected = 0.0;
    check(scenbdd_evaluate(h.bundle, opt.x_bits.empty() ? nullptr : opt.x_bits.c_str(), &report,
                           &expected));
    write_output(opt.out_path, take_string(report));
    return 0;
}

int cmd_emit(const CommonOptions& opt) {
    Handles h;
    load_instance(h, opt);
    load_ladder(h, opt);
    compile_bundle(h, opt);

    char* lp = nullptr;
    check(scenbdd_emit_lp(h.bundle, &lp));
    write_output(opt.out_path, take_string(lp));

    int64_t vars = 0, cons = 0;
    char* table = nullptr;
    check(scenbdd_model_counts(h.bundle, &vars, &cons, &table));
    std::ostream& meta = opt.out_path.empty() ? std::cerr : std::cout;
    meta << "model " << vars << " variables " << cons << " constraints\n" << take_string(table);
    return 0;
}

int cmd_check(const CommonOptions& opt) {
    Handles h;
    load_instance(h, opt);
    if (!opt.ladder_path.empty()) {
        check(scenbdd_ladder_read(h.instance, opt.ladder_path.c_str(), &h.ladder));
    }

    char* report = nullptr;
    int pass = 0;
    check(scenbdd_check(h.instance, h.ladder, effective_node_cap(opt.node_cap), &report, &pass));
    std::cout << take_string(report);
    return pass ? 0 : 1;
}

int cmd_bench(int n, int reps, const std::string& alpha, uint64_t seed, uint64_t node_cap) {
    double factor;
    if (alpha == "inf") {
        factor = 0.0;
    } else {
        factor = std::strtod(alpha.c_str(), nullptr);
        if (factor <= 1.0) {
            std::cerr << "error: --alpha-factor must be > 1 or inf\n";
            return 1;
        }
    }
    char* table = nullptr;
    check(scenbdd_bench_grid(n, reps, factor, seed, effective_node_cap(node_cap), &table));
    std::cout << take_string(table);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"scenbdd: exact MILP reformulation of stochastic network problems with "
                 "decision-dependent probabilities via BDD scenario aggregation"};
    app.require_subcommand(1);

    CommonOptions opt;
    int bench_n = 1;
    int bench_reps = 32;
    std::string bench_alpha = "1.1";
    uint64_t seed = 1;

    auto add_common = [&](CLI::App* sub, bool needs_instance = true) {
        auto* inst = sub->add_option("--instance", opt.instance_path, "instance file");
        if (needs_instance) inst->required();
        sub->add_option("--ladder", opt.ladder_path, "ladder file (default: enumerate)");
        sub->add_option("--order", opt.order, "variable order: occ|cmk|id|file");
        sub->add_option("--order-file", opt.order_file, "explicit order file for --order file");
        sub->add_option("--out", opt.out_path, "output path (default: stdout)");
        sub->add_option("--x", opt.x_bits, "decision bit string, leftmost char = edge 1");
        sub->add_option("--node-cap", opt.node_cap, "BDD node cap (0 = default)");
    };

    auto* ladder = app.add_subcommand("ladder", "enumerate or validate the critical ladder");
    add_common(ladder);
    auto* compile = app.add_subcommand("compile", "compile per-level BDDs and print statistics");
    add_common(compile);
    auto* evaluate = app.add_subcommand("evaluate", "exact probability report for a decision");
    add_common(evaluate);
    auto* emit = app.add_subcommand("emit", "write the exact reformulation as an LP file");
    add_common(emit);
    auto* checkcmd = app.add_subcommand("check", "oracle-vs-pipeline equivalence check");
    add_common(checkcmd);

    auto* bench = app.add_subcommand("bench-grid", "random grid benchmark of summed BDD sizes");
    bench->add_option("--n", bench_n, "grid parameter ((n+1)^2 nodes)");
    bench->add_option("--reps", bench_reps, "number of sampled networks");
    bench->add_option("--alpha-factor", bench_alpha, "cutoff factor over shortest distance, or inf");
    bench->add_option("--seed", seed, "random seed");
    bench->add_option("--node-cap", opt.node_cap, "BDD node cap (0 = default)");

    CLI11_PARSE(app, argc, argv);

    if (ladder->parsed()) return cmd_ladder(opt);
    if (compile->parsed()) return cmd_compile(opt);
    if (evaluate->parsed()) return cmd_evaluate(opt);
    if (emit->parsed()) return cmd_emit(opt);
    if (checkcmd->parsed()) return cmd_check(opt);
    if (bench->parsed()) return cmd_bench(bench_n, bench_reps, bench_alpha, seed, opt.node_cap);
    return 1;
}
