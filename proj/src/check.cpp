#include "check.hpp"

#include <cmath>

#include "mip.hpp"
#include "oracle.hpp"
#include "recourse.hpp"
#include "textio.hpp"

namespace scenbdd {

CheckResult run_check(const NetworkInstance& inst, const std::optional<CriticalLadder>& ladder,
                      uint64_t node_cap) {
    CheckResult result;
    CriticalLadder lad = ladder ? *ladder : enumerate_ladder(inst);

    CompileOptions options;
    options.node_cap = node_cap;
    BddBundle bundle = compile_bundle(inst, lad, options);

    OracleTable oracle(inst);

    double worst = 0.0;
    int checked = 0;
    bool ok = true;
    for_each_feasible_decision(inst, kOracleDecidableLimit, [&](const std::vector<uint8_t>& x) {
        double pipeline = evaluate(bundle, x).expected_value;
        double truth = oracle.expected(x);
        double err = std::abs(pipeline - truth);
        worst = std::max(worst, err);
        ++checked;
        if (err > kProbTol) {
            ok = false;
            result.report += "FAIL x=" + decision_to_string(x) + " pipeline=" + fmt_real(pipeline) +
                             " oracle=" + fmt_real(truth) + "\n";
        }
    });
    result.report += (ok ? "PASS" : "FAIL") + std::string(" expected-value equivalence over ") +
                     std::to_string(checked) + " decisions (max error " + fmt_real(worst) + ")\n";

    EnumerationSolution solved = solve_by_enumeration(inst, bundle.ladder, bundle.bdds);
    BestDecision best = oracle_best_decision(inst);
    bool opt_ok = solved.x == best.x && std::abs(solved.value - best.value) <= kProbTol;
    result.report += (opt_ok ? "PASS" : "FAIL") + std::string(" optimizer agreement: pipeline ") +
                     fmt_real(solved.value) + " @ " + decision_to_string(solved.x) + ", oracle " +
                     fmt_real(best.value) + " @ " + decision_to_string(best.x) + "\n";

    result.pass = ok && opt_ok;
    result.optimum = solved.value;
    result.optimum_x = decision_to_string(solved.x);
    result.report += "optimum " + fmt_real(result.optimum) + " x " + result.optimum_x + "\n";
    return result;
}

}  // namespace scenbdd
