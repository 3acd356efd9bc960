#include "doctest.h"

#include <stdexcept>

#include "conscheck/coloring_family.hpp"
#include "conscheck/edge_solvers.hpp"
#include "conscheck/exec.hpp"
#include "conscheck/oracle.hpp"
#include "support.hpp"

using namespace conscheck;
using testsupport::es;
using testsupport::make_instance;

TEST_CASE("find_first agrees across modes") {
    auto div7 = [](std::uint64_t i) { return i >= 30 && i % 7 == 0; };
    CHECK(exec::find_first(100, exec::Mode::Serial, div7) == 35);
    CHECK(exec::find_first(100, exec::Mode::Parallel, div7) == 35);
    auto never = [](std::uint64_t) { return false; };
    CHECK(!exec::find_first(100, exec::Mode::Serial, never).has_value());
    CHECK(!exec::find_first(100, exec::Mode::Parallel, never).has_value());
    CHECK(!exec::find_first(0, exec::Mode::Parallel, div7).has_value());
}

TEST_CASE("coloring families are deterministic and exhaustive mode counts in base c") {
    CHECK(default_trials(2) == 296);
    CHECK(default_trials(4) == 2184);
    CHECK(default_trials(6) == 16138);

    ColoringFamily a = ColoringFamily::random(3, 5, 99);
    ColoringFamily b = ColoringFamily::random(3, 5, 99);
    CHECK(a.size() == default_trials(3));
    for (std::uint64_t i : {0ull, 1ull, 17ull}) {
        std::vector<int> ca = a.coloring(i);
        REQUIRE(ca.size() == 5);
        CHECK(ca == b.coloring(i));  // same seed, same family
        for (int c : ca) {
            CHECK(c >= 0);
            CHECK(c < 3);
        }
    }

    ColoringFamily ex = ColoringFamily::exhaustive(2, 2);
    REQUIRE(ex.size() == 4);
    CHECK(ex.coloring(0) == std::vector<int>{0, 0});
    CHECK(ex.coloring(1) == std::vector<int>{1, 0});  // vertex 0 least significant
    CHECK(ex.coloring(2) == std::vector<int>{0, 1});
    CHECK(ex.coloring(3) == std::vector<int>{1, 1});
    CHECK_THROWS_AS(ColoringFamily::exhaustive(10, 10, 1000), std::length_error);
}

TEST_CASE("intersect_positives") {
    Instance inst = make_instance(
        Problem::Matching, 4,
        {{es({{0, 1}, {2, 3}}), 1}, {es({{1, 2}, {2, 3}}), 1}, {es({{0, 1}}), 0}}, 1);
    CHECK(intersect_positives(inst) == es({{2, 3}}));

    Instance none = make_instance(Problem::Matching, 4, {{es({{0, 1}}), 0}}, 1);
    CHECK_THROWS_AS(intersect_positives(none), std::logic_error);
}

TEST_CASE("matching color-coding step") {
    // single colorful edge beating one negative
    auto r = dp_matching(es({{0, 1}}), {es({{2, 3}})}, 1, {0, 1, 0, 1});
    REQUIRE(r.has_value());
    CHECK(*r == std::vector<Pair>{Pair(0, 1)});

    // the lone edge is present in the negative sample, so nothing works
    CHECK(!dp_matching(es({{0, 1}}), {es({{0, 1}})}, 1, {0, 1}).has_value());

    // an edge whose endpoints share a color is unusable under this coloring
    auto s = dp_matching(es({{0, 1}, {1, 2}}), {}, 1, {0, 0, 1});
    REQUIRE(s.has_value());
    CHECK(*s == std::vector<Pair>{Pair(1, 2)});
    CHECK(!dp_matching(es({{0, 1}}), {}, 1, {0, 0}).has_value());

    // two edges over four distinct colors
    auto t = dp_matching(es({{0, 1}, {1, 2}, {2, 3}}), {}, 2, {0, 1, 2, 3});
    REQUIRE(t.has_value());
    CHECK(*t == std::vector<Pair>{Pair(0, 1), Pair(2, 3)});

    // empty matching: succeeds exactly when there is no negative to beat
    auto e = dp_matching(es({{0, 1}}), {}, 0, {0, 1});
    REQUIRE(e.has_value());
    CHECK(e->empty());
    CHECK(!dp_matching(es({{0, 1}}), {es({{0, 1}})}, 0, {0, 1}).has_value());

    CHECK_THROWS_AS(dp_matching(EdgeSet{}, {}, -1, {}), std::invalid_argument);
    CHECK_THROWS_AS(dp_matching(es({{0, 1}}), {}, 1, {0, 5}), std::invalid_argument);
    std::vector<EdgeSet> many(32);
    CHECK_THROWS_AS(dp_matching(EdgeSet{}, many, 0, {}), std::invalid_argument);
}

TEST_CASE("path color-coding step") {
    // two triangle edges under a rainbow coloring
    auto r = dp_path(es({{0, 1}, {0, 2}, {1, 2}}), {}, 2, {0, 1, 2});
    REQUIRE(r.has_value());
    CHECK(*r == std::vector<Pair>{Pair(0, 1), Pair(1, 2)});

    auto one = dp_path(es({{0, 1}}), {es({{1, 2}})}, 1, {0, 1, 0});
    REQUIRE(one.has_value());
    CHECK(*one == std::vector<Pair>{Pair(0, 1)});

    // monochromatic endpoints cannot extend a path
    CHECK(!dp_path(es({{0, 1}}), {}, 1, {0, 0}).has_value());

    // the negative contains the whole candidate path, so it fails there
    CHECK(!dp_path(es({{0, 1}, {1, 2}}), {es({{0, 1}, {1, 2}})}, 2, {0, 1, 2}).has_value());
}

TEST_CASE("matching solver on hand instances") {
    // the unique consistent matching is the shared edge
    Instance uniq = make_instance(
        Problem::Matching, 4,
        {{es({{0, 1}, {2, 3}}), 1}, {es({{1, 2}, {2, 3}}), 1}, {es({{0, 1}}), 0}}, 1);
    Verdict v = solve_matching(uniq);
    REQUIRE(v.is_found());
    CHECK(*v.solution == Solution::pset({Pair(2, 3)}));

    // positives share no edge, so no k=1 matching can sit inside both
    Instance disjoint = make_instance(Problem::Matching, 4,
                                      {{es({{0, 1}}), 1}, {es({{2, 3}}), 1}}, 1);
    CHECK(!solve_matching(disjoint).is_found());

    // 2k > n leaves no room for k disjoint edges
    Instance tight = make_instance(Problem::Matching, 3, {{es({{0, 1}}), 1}}, 2);
    CHECK(!solve_matching(tight).is_found());

    // k = 0 with a positive works; any negative kills it
    Instance zero_ok = make_instance(Problem::Matching, 2, {{es({{0, 1}}), 1}}, 0);
    v = solve_matching(zero_ok);
    REQUIRE(v.is_found());
    CHECK(*v.solution == Solution::pset({}));
    Instance zero_bad = make_instance(Problem::Matching, 2,
                                      {{es({{0, 1}}), 1}, {EdgeSet{}, 0}}, 0);
    CHECK(!solve_matching(zero_bad).is_found());
}

TEST_CASE("matching solver without positive samples") {
    // k >= 2: a bundle through vertex 0 is a matching nowhere
    Instance neg2 = make_instance(Problem::Matching, 4,
                                  {{es({{0, 1}, {2, 3}}), 0}, {es({{0, 2}}), 0}}, 2);
    Verdict v = solve_matching(neg2);
    REQUIRE(v.is_found());
    CHECK(*v.solution == Solution::pset({Pair(0, 1), Pair(0, 2)}));

    // k = 1: first pair absent from every negative sample
    Instance neg1 = make_instance(Problem::Matching, 3, {{es({{0, 1}}), 0}}, 1);
    v = solve_matching(neg1);
    REQUIRE(v.is_found());
    CHECK(*v.solution == Solution::pset({Pair(0, 2)}));
    Instance all_pairs = make_instance(Problem::Matching, 3,
                                       {{es({{0, 1}, {0, 2}, {1, 2}}), 0}}, 1);
    CHECK(!solve_matching(all_pairs).is_found());

    // k = 0: the empty matching sits in every sample, so negatives lose
    Instance neg0 = make_instance(Problem::Matching, 2, {{es({{0, 1}}), 0}}, 0);
    CHECK(!solve_matching(neg0).is_found());
    Instance free0 = make_instance(Problem::Matching, 2, {}, 0);
    v = solve_matching(free0);
    REQUIRE(v.is_found());
    CHECK(*v.solution == Solution::pset({}));

    // more pairs requested than exist
    Instance toomany = make_instance(Problem::Matching, 2, {{EdgeSet{}, 0}}, 2);
    CHECK(!solve_matching(toomany).is_found());
}

TEST_CASE("path solver on hand instances") {
    Instance tri = make_instance(Problem::Path, 3,
                                 {{es({{0, 1}, {0, 2}, {1, 2}}), 1}, {es({{0, 1}}), 0}}, 2);
    Verdict v = solve_path(tri);
    REQUIRE(v.is_found());
    CHECK(is_consistent(tri, *v.solution));

    // k+1 vertices needed
    Instance cramped = make_instance(Problem::Path, 3, {{es({{0, 1}}), 1}}, 3);
    CHECK(!solve_path(cramped).is_found());

    // k = 0 consistent with positives only
    Instance zero = make_instance(Problem::Path, 2, {{es({{0, 1}}), 1}, {EdgeSet{}, 0}}, 0);
    CHECK(!solve_path(zero).is_found());
}

TEST_CASE("path solver without positive samples") {
    // k = 1 scans pairs lexicographically
    Instance neg1 = make_instance(Problem::Path, 3, {{es({{0, 1}, {0, 2}}), 0}}, 1);
    Verdict v = solve_path(neg1);
    REQUIRE(v.is_found());
    CHECK(*v.solution == Solution::pset({Pair(1, 2)}));

    // k = 2, n = 3: pairs of triangle edges, first combination absent
    // somewhere in every negative
    Instance tri = make_instance(Problem::Path, 3, {{es({{0, 1}, {0, 2}}), 0}}, 2);
    v = solve_path(tri);
    REQUIRE(v.is_found());
    CHECK(*v.solution == Solution::pset({Pair(0, 1), Pair(1, 2)}));

    // k = 2, n >= 4: two disjoint pairs are never a path
    Instance wide = make_instance(Problem::Path, 4,
                                  {{es({{0, 1}, {1, 2}, {2, 3}}), 0}}, 2);
    v = solve_path(wide);
    REQUIRE(v.is_found());
    CHECK(*v.solution == Solution::pset({Pair(0, 1), Pair(2, 3)}));

    // k >= 3: the claw at vertex 0 has a degree-3 center
    Instance claw = make_instance(Problem::Path, 4,
                                  {{es({{0, 1}, {0, 2}, {0, 3}, {1, 2}}), 0}}, 3);
    v = solve_path(claw);
    REQUIRE(v.is_found());
    CHECK(*v.solution == Solution::pset({Pair(0, 1), Pair(0, 2), Pair(0, 3)}));
}

TEST_CASE("edge solvers match the color-coding step exhaustively on small frames") {
    // for every coloring the DP either fails or returns a valid structure;
    // exhaustive mode then matches the oracle exactly
    std::mt19937_64 g(51);
    SolveOptions ex;
    ex.mode = ColoringMode::Exhaustive;
    for (int trial = 0; trial < 60; ++trial) {
        Instance m = testsupport::random_instance(g, Problem::Matching, trial % 2 == 0);
        if (m.n > 6 || *m.k > 2) continue;
        CAPTURE(trial);
        CHECK(testsupport::agrees_with_oracle(m, solve_matching(m, ex)));
        Instance p = testsupport::random_instance(g, Problem::Path, trial % 2 == 0);
        if (p.n > 6 || *p.k > 2) continue;
        CHECK(testsupport::agrees_with_oracle(p, solve_path(p, ex)));
    }
}

TEST_CASE("edge solvers agree with the oracle") {
    std::mt19937_64 g(52);
    for (int trial = 0; trial < 120; ++trial) {
        Instance m = testsupport::random_instance(g, Problem::Matching, trial % 2 == 0);
        CAPTURE(trial);
        Verdict serial = solve_matching(m, {.exec_mode = exec::Mode::Serial});
        Verdict parallel = solve_matching(m, {.exec_mode = exec::Mode::Parallel});
        REQUIRE(serial.is_found() == parallel.is_found());
        if (serial.is_found()) CHECK(*serial.solution == *parallel.solution);
        CHECK(testsupport::agrees_with_oracle(m, serial));
    }
    for (int trial = 0; trial < 120; ++trial) {
        Instance p = testsupport::random_instance(g, Problem::Path, trial % 2 == 0);
        CAPTURE(trial);
        Verdict serial = solve_path(p, {.exec_mode = exec::Mode::Serial});
        Verdict parallel = solve_path(p, {.exec_mode = exec::Mode::Parallel});
        REQUIRE(serial.is_found() == parallel.is_found());
        if (serial.is_found()) CHECK(*serial.solution == *parallel.solution);
        CHECK(testsupport::agrees_with_oracle(p, serial));
    }
}
