#include "scenbdd.h"

#include <cstdlib>
#include <cstring>
#include <optional>

#include "bench.hpp"
#include "bundle.hpp"
#include "check.hpp"
#include "decisions.hpp"
#include "error.hpp"
#include "instance.hpp"
#include "ladder.hpp"
#include "mip.hpp"
#include "oracle.hpp"
#include "recourse.hpp"
#include "textio.hpp"

using namespace scenbdd;

struct scenbdd_instance {
    NetworkInstance value;
};

struct scenbdd_ladder {
    CriticalLadder value;
};

struct scenbdd_bundle {
    BddBundle value;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
scenbdd_status wrap(F&& body) noexcept {
    try {
        body();
        return SCENBDD_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        switch (e.kind()) {
            case ErrorKind::Validation:
                return SCENBDD_ERR_VALIDATION;
            case ErrorKind::SizeCap:
                return SCENBDD_ERR_SIZE_CAP;
            case ErrorKind::Io:
                return SCENBDD_ERR_IO;
            case ErrorKind::Internal:
                return SCENBDD_ERR_INTERNAL;
        }
        return SCENBDD_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SCENBDD_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return SCENBDD_ERR_INTERNAL;
    }
}

scenbdd_status bad_argument(const char* what) {
    g_last_error = what;
    return SCENBDD_ERR_ARGUMENT;
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::vector<uint8_t> decision_from(const NetworkInstance& inst, const char* x_bits) {
    if (!x_bits) return zero_decision(inst);
    return parse_decision(inst, x_bits);
}

}  // namespace

extern "C" {

const char* scenbdd_version(void) { return "0.1.0"; }

const char* scenbdd_last_error(void) { return g_last_error.c_str(); }

void scenbdd_string_free(char* s) { std::free(s); }

/* ---- instance ------------------------------------------------------- */

scenbdd_status scenbdd_instance_parse(const char* text, scenbdd_instance** out) {
    if (!text || !out) return bad_argument("null argument");
    return wrap([&] { *out = new scenbdd_instance{parse_instance(text)}; });
}

scenbdd_status scenbdd_instance_read(const char* path, scenbdd_instance** out) {
    if (!path || !out) return bad_argument("null argument");
    return wrap([&] { *out = new scenbdd_instance{read_instance_file(path)}; });
}

void scenbdd_instance_free(scenbdd_instance* inst) { delete inst; }

int scenbdd_instance_num_edges(const scenbdd_instance* inst) {
    return inst ? inst->value.num_edges() : -1;
}

int scenbdd_instance_num_nodes(const scenbdd_instance* inst) {
    return inst ? inst->value.num_nodes() : -1;
}

int scenbdd_instance_mode(const scenbdd_instance* inst) {
    return inst ? (inst->value.mode == Mode::MaxFlow ? 1 : 0) : -1;
}

scenbdd_status scenbdd_instance_validate(const scenbdd_instance* inst, char** violations) {
    if (!inst || !violations) return bad_argument("null argument");
    return wrap([&] {
        std::string joined;
        for (const std::string& v : validate_instance(inst->value)) {
            joined += v + "\n";
        }
        *violations = copy_string(joined);
    });
}

scenbdd_status scenbdd_instance_format(const scenbdd_instance* inst, char** text) {
    if (!inst || !text) return bad_argument("null argument");
    return wrap([&] { *text = copy_string(serialize_instance(inst->value)); });
}

/* ---- critical ladder ------------------------------------------------- */

scenbdd_status scenbdd_ladder_enumerate(const scenbdd_instance* inst, scenbdd_ladder** out) {
    if (!inst || !out) return bad_argument("null argument");
    return wrap([&] { *out = new scenbdd_ladder{enumerate_ladder(inst->value)}; });
}

scenbdd_status scenbdd_ladder_parse(const scenbdd_instance* inst, const char* text,
                                    scenbdd_ladder** out) {
    if (!inst || !text || !out) return bad_argument("null argument");
    return wrap([&] { *out = new scenbdd_ladder{load_ladder(text, inst->value)}; });
}

scenbdd_status scenbdd_ladder_read(const scenbdd_instance* inst, const char* path,
                                   scenbdd_ladder** out) {
    if (!inst || !path || !out) return bad_argument("null argument");
    return wrap([&] { *out = new scenbdd_ladder{load_ladder(read_text_file(path), inst->value)}; });
}

scenbdd_status scenbdd_ladder_format(const scenbdd_ladder* ladder, char** text) {
    if (!ladder || !text) return bad_argument("null argument");
    return wrap([&] { *text = copy_string(serialize_ladder(ladder->value)); });
}

void scenbdd_ladder_free(scenbdd_ladder* ladder) { delete ladder; }

int scenbdd_ladder_num_levels(const scenbdd_ladder* ladder) {
    return ladder ? ladder->value.num_levels() : -1;
}

scenbdd_status scenbdd_ladder_alpha(const scenbdd_ladder* ladder, int level, double* alpha) {
    if (!ladder || !alpha) return bad_argument("null argument");
    if (level < 0 || level >= ladder->value.num_levels()) return bad_argument("level out of range");
    *alpha = ladder->value.levels[level].alpha;
    return SCENBDD_OK;
}

scenbdd_status scenbdd_ladder_value(const scenbdd_ladder* ladder, int level, double* value) {
    if (!ladder || !value) return bad_argument("null argument");
    if (level < 0 || level >= ladder->value.num_levels()) return bad_argument("level out of range");
    *value = ladder->value.objective_value(level);
    return SCENBDD_OK;
}

scenbdd_status scenbdd_ladder_level_size(const scenbdd_ladder* ladder, int level, int* size) {
    if (!ladder || !size) return bad_argument("null argument");
    if (level < 0 || level >= ladder->value.num_levels()) return bad_argument("level out of range");
    *size = static_cast<int>(ladder->value.levels[level].min_true_points.size());
    return SCENBDD_OK;
}

int scenbdd_ladder_has_penalty(const scenbdd_ladder* ladder) {
    return ladder && ladder->value.penalty_alpha ? 1 : 0;
}

scenbdd_status scenbdd_ladder_failure_clutter(const scenbdd_ladder* ladder, int level,
                                              size_t bound, char** text) {
    if (!ladder || !text) return bad_argument("null argument");
    return wrap([&] {
        std::string out;
        for (const Scenario& s : failure_clutter(ladder->value, level, bound)) {
            out += s.to_string() + "\n";
        }
        *text = copy_string(out);
    });
}

/* ---- compiled BDD bundle --------------------------------------------- */

scenbdd_status scenbdd_compile(const scenbdd_instance* inst, const scenbdd_ladder* ladder,
                               scenbdd_order_kind order_kind, const int* explicit_order,
                               uint64_t node_cap, scenbdd_bundle** out) {
    if (!inst || !ladder || !out) return bad_argument("null argument");
    return wrap([&] {
        CompileOptions options;
        switch (order_kind) {
            case SCENBDD_ORDER_OCCURRENCE:
                options.heuristic = OrderingHeuristic::OccurrenceAscending;
                break;
            case SCENBDD_ORDER_CUTHILL_MCKEE:
                options.heuristic = OrderingHeuristic::CuthillMcKeeLike;
                break;
            case SCENBDD_ORDER_IDENTITY:
                options.heuristic = OrderingHeuristic::Identity;
                break;
            case SCENBDD_ORDER_EXPLICIT:
                options.heuristic = OrderingHeuristic::Explicit;
                if (!explicit_order) throw Error::validation("explicit order missing");
                options.explicit_order.assign(explicit_order,
                                              explicit_order + inst->value.num_edges());
                break;
            default:
                throw Error::validation("unknown order kind");
        }
        if (node_cap) options.node_cap = node_cap;
        *out = new scenbdd_bundle{compile_bundle(inst->value, ladder->value, options)};
    });
}

void scenbdd_bundle_free(scenbdd_bundle* bundle) { delete bundle; }

int scenbdd_bundle_num_levels(const scenbdd_bundle* bundle) {
    return bundle ? bundle->value.num_levels() : -1;
}

scenbdd_status scenbdd_bundle_order(const scenbdd_bundle* bundle, int* order) {
    if (!bundle || !order) return bad_argument("null argument");
    const std::vector<int>& o = bundle->value.shared_order;
    for (size_t i = 0; i < o.size(); ++i) order[i] = o[i];
    return SCENBDD_OK;
}

scenbdd_status scenbdd_bundle_size(const scenbdd_bundle* bundle, int level, int64_t* total_size) {
    if (!bundle || !total_size) return bad_argument("null argument");
    if (level < 0 || level >= bundle->value.num_levels()) return bad_argument("level out of range");
    *total_size = stats(bundle->value.bdds[level]).total_size;
    return SCENBDD_OK;
}

scenbdd_status scenbdd_bundle_width(const scenbdd_bundle* bundle, int level, int* width) {
    if (!bundle || !width) return bad_argument("null argument");
    if (level < 0 || level >= bundle->value.num_levels()) return bad_argument("level out of range");
    *width = stats(bundle->value.bdds[level]).width;
    return SCENBDD_OK;
}

scenbdd_status scenbdd_bundle_bandwidth(const scenbdd_bundle* bundle, int level, int* bandwidth) {
    if (!bundle || !bandwidth) return bad_argument("null argument");
    if (level < 0 || level >= bundle->value.num_levels()) return bad_argument("level out of range");
    *bandwidth = incidence_bandwidth(bundle->value.level_families[level],
                                     bundle->value.bdds[level].order);
    return SCENBDD_OK;
}

scenbdd_status scenbdd_bundle_dump(const scenbdd_bundle* bundle, int level, char** text) {
    if (!bundle || !text) return bad_argument("null argument");
    if (level < 0 || level >= bundle->value.num_levels()) return bad_argument("level out of range");
    return wrap([&] { *text = copy_string(dump_bdd(bundle->value.bdds[level])); });
}

/* ---- evaluation, model emission, optimization ------------------------ */

scenbdd_status scenbdd_evaluate(const scenbdd_bundle* bundle, const char* x_bits, char** report_out,
                                double* expected) {
    if (!bundle) return bad_argument("null argument");
    return wrap([&] {
        std::vector<uint8_t> x = decision_from(bundle->value.instance, x_bits);
        ProbabilityReport rep = evaluate(bundle->value, x);
        if (report_out) *report_out = copy_string(serialize_report(rep));
        if (expected) *expected = rep.expected_value;
    });
}

scenbdd_status scenbdd_emit_lp(const scenbdd_bundle* bundle, char** lp_text) {
    if (!bundle || !lp_text) return bad_argument("null argument");
    return wrap([&] {
        MipModel model =
            emit_mip(bundle->value.instance, bundle->value.ladder, bundle->value.bdds);
        *lp_text = copy_string(write_lp(model));
    });
}

scenbdd_status scenbdd_model_counts(const scenbdd_bundle* bundle, int64_t* num_variables,
                                    int64_t* num_constraints, char** per_level_table) {
    if (!bundle) return bad_argument("null argument");
    return wrap([&] {
        MipModel model =
            emit_mip(bundle->value.instance, bundle->value.ladder, bundle->value.bdds);
        if (num_variables) *num_variables = static_cast<int64_t>(model.variables.size());
        if (num_constraints) *num_constraints = static_cast<int64_t>(model.constraints.size());
        if (per_level_table) {
            std::string out = "level paper-variables paper-constraints\n";
            for (size_t i = 0; i < model.levels.size(); ++i) {
                out += std::to_string(i) + " " + std::to_string(model.levels[i].paper_variables) +
                       " " + std::to_string(model.levels[i].paper_constraints) + "\n";
            }
            *per_level_table = copy_string(out);
        }
    });
}

scenbdd_status scenbdd_solve_enumeration(const scenbdd_bundle* bundle, char** x_bits,
                                         double* value) {
    if (!bundle) return bad_argument("null argument");
    return wrap([&] {
        EnumerationSolution solution = solve_by_enumeration(
            bundle->value.instance, bundle->value.ladder, bundle->value.bdds);
        if (x_bits) *x_bits = copy_string(decision_to_string(solution.x));
        if (value) *value = solution.value;
    });
}

/* ---- brute-force oracle ---------------------------------------------- */

scenbdd_status scenbdd_oracle_expected(const scenbdd_instance* inst, const char* x_bits,
                                       double* expected) {
    if (!inst || !expected) return bad_argument("null argument");
    return wrap([&] {
        std::vector<uint8_t> x = decision_from(inst->value, x_bits);
        *expected = oracle_expected(inst->value, x).expected_value;
    });
}

scenbdd_status scenbdd_oracle_best(const scenbdd_instance* inst, char** x_bits, double* value) {
    if (!inst) return bad_argument("null argument");
    return wrap([&] {
        BestDecision best = oracle_best_decision(inst->value);
        if (x_bits) *x_bits = copy_string(decision_to_string(best.x));
        if (value) *value = best.value;
    });
}

/* ---- end-to-end check ------------------------------------------------ */

scenbdd_status scenbdd_check(const scenbdd_instance* inst, const scenbdd_ladder* ladder,
                             uint64_t node_cap, char** report_out, int* pass) {
    if (!inst) return bad_argument("null argument");
    return wrap([&] {
        std::optional<CriticalLadder> lad;
        if (ladder) lad = ladder->value;
        CheckResult result =
            run_check(inst->value, lad, node_cap ? node_cap : kDefaultNodeCap);
        if (report_out) *report_out = copy_string(result.report);
        if (pass) *pass = result.pass ? 1 : 0;
    });
}

/* ---- benchmark harness ------------------------------------------------ */

scenbdd_status scenbdd_bench_grid(int n, int repetitions, double alpha_factor, uint64_t seed,
                                  uint64_t node_cap, char** table) {
    if (!table) return bad_argument("null argument");
    return wrap([&] {
        BenchConfig config;
        config.n = n;
        config.repetitions = repetitions;
        config.alpha_factor = alpha_factor;
        config.seed = seed;
        config.node_cap = node_cap;
        *table = copy_string(bench_grid(config));
    });
}

}  // extern "C"
