#include "doctest.h"

#include <algorithm>
#include <random>

#include "bdd.hpp"
#include "ladder.hpp"

using namespace scenbdd;

namespace {

std::vector<Scenario> family(std::initializer_list<const char*> rows) {
    std::vector<Scenario> out;
    for (const char* r : rows) out.push_back(Scenario::from_string(r));
    return out;
}

std::vector<int> identity_order(int n) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i + 1;
    return order;
}

bool direct_eval(const std::vector<Scenario>& fam, const Scenario& xi) {
    return std::any_of(fam.begin(), fam.end(),
                       [&](const Scenario& m) { return m.is_subset_of(xi); });
}

Scenario nth_scenario(int width, uint64_t mask) {
    Scenario s(width);
    for (int e = 1; e <= width; ++e) {
        if (mask & (uint64_t{1} << (e - 1))) s.set(e);
    }
    return s;
}

void check_semantics(const std::vector<Scenario>& fam, const Bdd& b) {
    for (uint64_t mask = 0; mask < (uint64_t{1} << b.num_vars); ++mask) {
        Scenario xi = nth_scenario(b.num_vars, mask);
        if (eval(b, xi) != direct_eval(fam, xi)) {
            CAPTURE(xi.to_string());
            FAIL_CHECK("semantic mismatch");
            return;
        }
    }
}

bool same_structure(const Bdd& a, const Bdd& b) {
    if (a.root != b.root || a.order != b.order || a.nodes.size() != b.nodes.size()) return false;
    for (size_t i = 0; i < a.nodes.size(); ++i) {
        if (a.nodes[i].layer != b.nodes[i].layer || a.nodes[i].lo != b.nodes[i].lo ||
            a.nodes[i].hi != b.nodes[i].hi) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("occurrence ordering counts across the whole family") {
    auto order = order_edges(3, family({"110", "011"}), OrderingHeuristic::OccurrenceAscending);
    CHECK(order == std::vector<int>{1, 3, 2});  // counts (1,2,1), tie by index
}

TEST_CASE("unused edges order first as don't-cares") {
    auto order = order_edges(3, family({"010"}), OrderingHeuristic::OccurrenceAscending);
    CHECK(order == std::vector<int>{1, 3, 2});
}

TEST_CASE("explicit order passes through, bad permutations are rejected") {
    std::vector<int> perm{3, 1, 2};
    CHECK(order_edges(3, {}, OrderingHeuristic::Explicit, &perm) == perm);
    std::vector<int> bad{1, 1, 2};
    CHECK_THROWS_AS(order_edges(3, {}, OrderingHeuristic::Explicit, &bad), Error);
}

TEST_CASE("cuthill-mckee-like order is a permutation and lowers bandwidth") {
    // chain co-occurrence: pairs (1,4),(4,2),(2,5),(5,3) under identity
    // order span the whole matrix; the BFS order packs them tightly
    auto fam = family({"100100", "010100", "010010", "001010"});
    auto order = order_edges(6, fam, OrderingHeuristic::CuthillMcKeeLike);
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == identity_order(6));
    CHECK(incidence_bandwidth(fam, order) <= 2);
    CHECK(incidence_bandwidth(fam, identity_order(6)) >= 4);
}

TEST_CASE("single minimal true point of one variable") {
    Bdd b = compile_monotone(family({"1"}), identity_order(1));
    REQUIRE(b.num_internal() == 1);
    CHECK(b.nodes[0].hi == kTrueRef);
    CHECK(b.nodes[0].lo == kFalseRef);
    BddStats st = stats(b);
    CHECK(st.total_size == 3);
    CHECK(st.width == 1);
}

TEST_CASE("or of n singletons is a chain of n nodes") {
    for (int n : {2, 5, 10}) {
        std::vector<Scenario> fam;
        for (int e = 1; e <= n; ++e) {
            Scenario s(n);
            s.set(e);
            fam.push_back(s);
        }
        Bdd b = compile_monotone(fam, identity_order(n));
        CHECK(b.num_internal() == n);
        BddStats st = stats(b);
        CHECK(st.total_size == n + 2);
        CHECK(st.width == 1);
        check_semantics(fam, b);
    }
}

TEST_CASE("and of one n-edge set is a chain of n nodes") {
    for (int n : {2, 5, 10}) {
        Scenario all(n);
        for (int e = 1; e <= n; ++e) all.set(e);
        Bdd b = compile_monotone({all}, identity_order(n));
        CHECK(b.num_internal() == n);
        CHECK(stats(b).width == 1);
        check_semantics({all}, b);
    }
}

TEST_CASE("degenerate functions compile to bare terminals") {
    Bdd none = compile_monotone({}, identity_order(3));
    CHECK(none.root == kFalseRef);
    CHECK(stats(none).total_size == 1);
    CHECK(stats(none).width == 0);

    Bdd all = compile_monotone({Scenario(3)}, identity_order(3));
    CHECK(all.root == kTrueRef);
    CHECK(stats(all).total_size == 1);
    CHECK(eval(all, Scenario::from_string("000")));
}

TEST_CASE("non-antichain input is rejected") {
    CHECK_THROWS_WITH_AS(compile_monotone(family({"10", "11"}), identity_order(2)),
                         doctest::Contains("antichain"), Error);
}

TEST_CASE("eval follows the spec examples") {
    auto fam = family({"011"});  // the two-hop route of the triangle
    Bdd b = compile_monotone(fam, identity_order(3));
    CHECK(eval(b, Scenario::from_string("111")));
    CHECK(eval(b, Scenario::from_string("011")));
    CHECK_FALSE(eval(b, Scenario::from_string("100")));
    CHECK_FALSE(eval(b, Scenario::from_string("000")));
}

TEST_CASE("duality swaps arcs, is an involution and flips the input") {
    auto fam = family({"10", "01"});
    Bdd b = compile_monotone(fam, identity_order(2));
    Bdd d = dual_bdd(b);
    CHECK(d.num_internal() == b.num_internal());
    CHECK(stats(d).total_size == stats(b).total_size);
    CHECK(stats(d).width == stats(b).width);
    CHECK(same_structure(dual_bdd(d), b));

    // the dual BDD evaluates the original on the complemented scenario
    for (uint64_t mask = 0; mask < 4; ++mask) {
        Scenario xi = nth_scenario(2, mask);
        CHECK(eval(d, xi) == eval(b, xi.complement()));
    }

    Bdd single = compile_monotone(family({"1"}), identity_order(1));
    Bdd dual_single = dual_bdd(single);
    CHECK(dual_single.nodes[0].hi == kFalseRef);
    CHECK(dual_single.nodes[0].lo == kTrueRef);
}

TEST_CASE("dual function's minimal true points are the transversals") {
    auto fam = family({"1100", "0011"});
    Bdd b = compile_monotone(fam, identity_order(4));
    Bdd trans = compile_monotone(minimal_transversals(fam, 4, 1000), identity_order(4));
    Bdd d = dual_bdd(b);
    for (uint64_t mask = 0; mask < 16; ++mask) {
        Scenario xi = nth_scenario(4, mask);
        // Phi^D(xi) = not evaluating the label-swapped BDD
        CHECK(eval(trans, xi) == !eval(d, xi));
    }
}

TEST_CASE("compilation is canonical under input shuffling") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        std::vector<Scenario> fam;
        for (int i = 0; i < 6; ++i) fam.push_back(nth_scenario(n, rng() & ((1u << n) - 1)));
        fam = minimize_family(fam);
        std::vector<int> order = identity_order(n);
        std::shuffle(order.begin(), order.end(), rng);

        Bdd reference = compile_monotone(fam, order);
        for (int shuffle = 0; shuffle < 4; ++shuffle) {
            std::shuffle(fam.begin(), fam.end(), rng);
            CHECK(same_structure(compile_monotone(fam, order), reference));
        }
        CHECK(validate_bdd(reference).empty());
        check_semantics(fam, reference);

        // monotone: flipping any variable up never flips the value down
        for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
            Scenario lo_point = nth_scenario(n, mask);
            if (!eval(reference, lo_point)) continue;
            for (int e = 1; e <= n; ++e) {
                Scenario hi_point = lo_point;
                hi_point.set(e);
                CHECK(eval(reference, hi_point));
            }
        }
    }
}

TEST_CASE("semantic equivalence at sixteen variables") {
    std::mt19937_64 rng(99);
    std::vector<Scenario> fam;
    for (int i = 0; i < 12; ++i) fam.push_back(nth_scenario(16, rng() & 0xffff));
    fam = minimize_family(fam);
    Bdd b = compile_monotone(fam, identity_order(16));
    CHECK(validate_bdd(b).empty());
    check_semantics(fam, b);
}

TEST_CASE("node cap aborts compilation") {
    std::vector<Scenario> fam;
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) fam.push_back(nth_scenario(12, rng() & 0xfff));
    fam = minimize_family(fam);
    CHECK_THROWS_AS(compile_monotone(fam, identity_order(12), 2), Error);
    try {
        compile_monotone(fam, identity_order(12), 2);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SizeCap);
        CHECK(std::string(e.what()).find("node cap") != std::string::npos);
    }
}

TEST_CASE("dump is deterministic with topological ids") {
    Bdd b = compile_monotone(family({"110", "011"}), identity_order(3));
    std::string dump = dump_bdd(b);
    CHECK(dump == dump_bdd(b));
    CHECK(dump.find("vars 3") == 0);
    CHECK(dump.find("root 1") != std::string::npos);
    // root line "1 <edge> <lo> <hi>" exists and terminals are T/F tokens
    CHECK(dump.find("\n1 1 ") != std::string::npos);
    CHECK(dump.find(" T") != std::string::npos);

    Bdd top = compile_monotone({Scenario(2)}, identity_order(2));
    CHECK(dump_bdd(top) == "vars 2\norder 1 2\nroot T\n");
}

TEST_CASE("layer skips create no nodes") {
    // edge 2 never occurs: the BDD branches on layers 1 and 3 only
    auto fam = family({"101"});
    Bdd b = compile_monotone(fam, identity_order(3));
    CHECK(b.num_internal() == 2);
    for (const BddNode& n : b.nodes) CHECK(n.layer != 2);
    check_semantics(fam, b);
}
