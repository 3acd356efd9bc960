#include "doctest.h"

#include <stdexcept>

#include "conscheck/oracle.hpp"
#include "conscheck/vertex_solvers.hpp"
#include "support.hpp"

using namespace conscheck;
using testsupport::es;
using testsupport::make_instance;

TEST_CASE("dominating-set solver on hand instances") {
    EdgeSet path4 = es({{0, 1}, {1, 2}, {2, 3}});

    // lexicographically first dominating pair of the path
    Instance pos = make_instance(Problem::DominatingSetDeg, 4, {{path4, 1}}, 2, 2);
    Verdict v = solve_dominating_set(pos);
    REQUIRE(v.is_found());
    CHECK(*v.solution == Solution::vset({0, 2}));

    // no single vertex dominates a four-path; here n > k(d+1) already decides
    Instance one = make_instance(Problem::DominatingSetDeg, 4, {{path4, 1}}, 1, 2);
    CHECK(!solve_dominating_set(one).is_found());

    // beyond the k(d+1) bound, any k-set fails every sample
    Instance wide = make_instance(Problem::DominatingSetDeg, 8, {{es({{0, 1}}), 0}}, 2, 2);
    v = solve_dominating_set(wide);
    REQUIRE(v.is_found());
    CHECK(*v.solution == Solution::vset({0, 1}));
    Instance wide_pos = make_instance(Problem::DominatingSetDeg, 8, {{es({{0, 1}}), 1}}, 2, 2);
    CHECK(!solve_dominating_set(wide_pos).is_found());

    // d = 0 allows only the full vertex set to dominate
    Instance full = make_instance(Problem::DominatingSetDeg, 2, {{EdgeSet{}, 1}}, 2, 0);
    v = solve_dominating_set(full);
    REQUIRE(v.is_found());
    CHECK(*v.solution == Solution::vset({0, 1}));
    Instance not_full = make_instance(Problem::DominatingSetDeg, 2, {{EdgeSet{}, 1}}, 1, 0);
    CHECK(!solve_dominating_set(not_full).is_found());

    // contradictory labels on the same edges
    Instance contra = make_instance(Problem::DominatingSetDeg, 3,
                                    {{es({{0, 1}}), 1}, {es({{0, 1}}), 0}}, 3, 1);
    CHECK(!solve_dominating_set(contra).is_found());
}

TEST_CASE("dominating-set solver agrees with the oracle") {
    std::mt19937_64 g(71);
    for (int trial = 0; trial < 150; ++trial) {
        Instance inst = testsupport::random_instance(g, Problem::DominatingSetDeg, trial % 2 == 0);
        CAPTURE(trial);
        Verdict serial = solve_dominating_set(inst, exec::Mode::Serial);
        Verdict parallel = solve_dominating_set(inst, exec::Mode::Parallel);
        REQUIRE(serial.is_found() == parallel.is_found());
        if (serial.is_found()) CHECK(*serial.solution == *parallel.solution);
        CHECK(testsupport::agrees_with_oracle(inst, serial));
    }
}

TEST_CASE("adjacency-pattern templates") {
    CHECK(enumerate_templates(1, 0).size() == 1);
    CHECK(enumerate_templates(1, 1).empty());  // a lone vertex cannot clash anywhere
    CHECK(enumerate_templates(2, 0).size() == 1);

    auto one_edge = enumerate_templates(2, 1);
    REQUIRE(one_edge.size() == 1);
    CHECK(one_edge[0].k == 2);
    CHECK(one_edge[0].edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(one_edge[0].labels == std::vector<std::uint32_t>{1});
    CHECK(one_edge[0].has_edge(0, 1));
    CHECK(one_edge[0].has_edge(1, 0));
    CHECK(!one_edge[0].has_edge(0, 0));
    CHECK(one_edge[0].label(0, 1) == 1);

    // three nodes, one negative: each of the 2^3 - 1 nonempty subsets of the
    // three possible edges uses the sample
    CHECK(enumerate_templates(3, 1).size() == 7);

    CHECK_THROWS_AS(enumerate_templates(2, 32), std::invalid_argument);
}

TEST_CASE("component placement lists matching tuples in vertex order") {
    SolutionTemplate tmpl;
    tmpl.k = 2;
    tmpl.edges = {{0, 1}};
    tmpl.labels = {1};

    Instance inst = make_instance(Problem::IndependentSetDeg, 4,
                                  {{es({{0, 1}, {2, 3}}), 0}}, 2, 1);
    std::vector<int> coloring{0, 1, 0, 1};
    auto tuples = place_component(tmpl, {0, 1}, coloring, inst);
    CHECK(tuples == std::vector<std::vector<VertexId>>{{0, 1}, {2, 3}});

    // a positive sample containing the pair rules the tuple out
    Instance blocked = make_instance(Problem::IndependentSetDeg, 4,
                                     {{es({{0, 1}, {2, 3}}), 0}, {es({{0, 1}}), 1}}, 2, 1);
    CHECK(place_component(tmpl, {0, 1}, coloring, blocked) ==
          std::vector<std::vector<VertexId>>{{2, 3}});

    // template adjacency must hold exactly: an extra negative where the pair
    // is absent eliminates placements whose label claims presence
    Instance exact = make_instance(Problem::IndependentSetDeg, 4,
                                   {{es({{0, 1}, {2, 3}}), 0}, {es({{2, 3}}), 0}}, 2, 1);
    // label 1 = adjacent only in the first negative: (2,3) is adjacent in
    // both, (0,1) only in the first
    CHECK(place_component(tmpl, {0, 1}, coloring, exact) ==
          std::vector<std::vector<VertexId>>{{0, 1}});

    // disconnected node sets are rejected
    SolutionTemplate loose;
    loose.k = 2;
    CHECK_THROWS_AS(place_component(loose, {0, 1}, coloring, inst), std::logic_error);
}

TEST_CASE("placement threshold formula") {
    // k=1: pool = d*t*(dt) = (dt)^2, one term
    CHECK(placement_threshold(1, 2, 3) == 36);
    // k=2, d=1, t=1: pool = 2, C(2,1) + C(2,2) = 3
    CHECK(placement_threshold(2, 1, 1) == 3);
    CHECK(placement_threshold(1, 0, 2) == 0);
}

TEST_CASE("independent-set solver on hand instances") {
    // forcing both members: independent in the positive, clashing in the negative
    Instance uniq = make_instance(Problem::IndependentSetDeg, 4,
                                  {{es({{0, 1}}), 1}, {es({{2, 3}}), 0}}, 2, 1);
    Verdict v = solve_independent_set(uniq);
    REQUIRE(v.is_found());
    CHECK(*v.solution == Solution::vset({2, 3}));

    // k = 0: empty set is independent everywhere
    Instance zero = make_instance(Problem::IndependentSetDeg, 3, {{es({{0, 1}}), 1}}, 0, 1);
    v = solve_independent_set(zero);
    REQUIRE(v.is_found());
    CHECK(*v.solution == Solution::vset({}));
    Instance zero_neg = make_instance(Problem::IndependentSetDeg, 3, {{es({{0, 1}}), 0}}, 0, 1);
    CHECK(!solve_independent_set(zero_neg).is_found());

    // k = 1: singletons are independent everywhere, so negatives are fatal
    Instance single_neg = make_instance(Problem::IndependentSetDeg, 3, {{es({{0, 1}}), 0}}, 1, 1);
    CHECK(!solve_independent_set(single_neg).is_found());

    Instance too_big = make_instance(Problem::IndependentSetDeg, 2, {{EdgeSet{}, 1}}, 3, 1);
    CHECK(!solve_independent_set(too_big).is_found());

    // all-negative: X must clash inside every negative sample
    Instance negs = make_instance(Problem::IndependentSetDeg, 4,
                                  {{es({{0, 1}}), 0}, {es({{0, 1}, {2, 3}}), 0}}, 2, 1);
    v = solve_independent_set(negs);
    REQUIRE(v.is_found());
    CHECK(*v.solution == Solution::vset({0, 1}));  // the only pair clashing in both
    CHECK(is_consistent(negs, *v.solution));
}

TEST_CASE("independent-set solver agrees with the oracle") {
    std::mt19937_64 g(72);
    for (int trial = 0; trial < 150; ++trial) {
        Instance inst = testsupport::random_instance(g, Problem::IndependentSetDeg, trial % 2 == 0);
        CAPTURE(trial);
        Verdict serial = solve_independent_set(inst, {.exec_mode = exec::Mode::Serial});
        Verdict parallel = solve_independent_set(inst, {.exec_mode = exec::Mode::Parallel});
        REQUIRE(serial.is_found() == parallel.is_found());
        if (serial.is_found()) CHECK(*serial.solution == *parallel.solution);
        CHECK(testsupport::agrees_with_oracle(inst, serial));
    }
}
