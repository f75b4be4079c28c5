#include "doctest.h"

#include <algorithm>

#include "spansub/constructions.hpp"
#include "spansub/graph.hpp"
#include "spansub/rng.hpp"
#include "test_util.hpp"

using namespace spansub;

TEST_CASE("graph construction validates its input") {
    CHECK_THROWS_AS(LabeledGraph(0, {}), ParamsError);
    CHECK_THROWS_AS(LabeledGraph(3, {{1, 4}}), ParamsError);
    CHECK_THROWS_AS(LabeledGraph(3, {{0, 2}}), ParamsError);
    CHECK_THROWS_AS(LabeledGraph(3, {{2, 2}}), ParamsError);
    CHECK_THROWS_AS(LabeledGraph(3, {{1, 2}, {2, 1}}), ParamsError);
}

TEST_CASE("graph accessors") {
    LabeledGraph g(5, {{1, 3}, {1, 2}, {2, 5}, {3, 5}});
    CHECK(g.n() == 5);
    CHECK(g.edge_count() == 4);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(4) == 0);
    CHECK(g.neighbors(1) == std::vector<int>{2, 3});
    CHECK(g.neighbors(5) == std::vector<int>{2, 3});
    CHECK(g.has_edge(1, 3));
    CHECK(g.has_edge(3, 1));
    CHECK_FALSE(g.has_edge(1, 5));
    CHECK(g.max_degree() == 2);
    CHECK(g.edges() ==
          std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 5}, {3, 5}});
    CHECK_THROWS_AS(g.degree(6), ParamsError);
    CHECK(g == LabeledGraph(5, {{3, 5}, {2, 5}, {1, 2}, {1, 3}}));
}

TEST_CASE("params validation") {
    CHECK_NOTHROW((Params{5, 2, 2}).validate());
    CHECK_NOTHROW((Params{3, 1, 1}).validate());
    CHECK_THROWS_AS((Params{5, 2, 3}).validate(), ParamsError); // k < l
    CHECK_THROWS_AS((Params{3, 2, 2}).validate(), ParamsError); // n < l + 2
    CHECK_THROWS_AS((Params{5, 2, 0}).validate(), ParamsError); // l < 1
}

TEST_CASE("bandwidth witness") {
    LabeledGraph path(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
    CHECK(bandwidth_witness_ok(path, 1));
    CHECK(bandwidth_witness_ok(power_path(8, 2), 2));
    CHECK_FALSE(bandwidth_witness_ok(power_path(8, 2), 1));
    // K_4 has the edge (1, 4), which stretches 3.
    CHECK_FALSE(bandwidth_witness_ok(power_path(4, 3), 2));
    CHECK(bandwidth_witness_ok(power_path(4, 3), 3));
    CHECK(bandwidth_witness_ok(LabeledGraph::empty(5), 0));
}

TEST_CASE("power path degree formula matches the constructed graph") {
    for (int n = 1; n <= 12; ++n) {
        for (int k = 1; k <= 5; ++k) {
            LabeledGraph g = power_path(n, k);
            for (int i = 1; i <= n; ++i) {
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(i);
                CHECK(g.degree(i) == power_path_degree(n, k, i));
            }
        }
    }
}

TEST_CASE("effective minimum degree on known instances") {
    // A graph relative to itself maxes out at its maximum degree.
    CHECK(effective_min_degree(power_path(9, 2), power_path(9, 2)) == 4);
    CHECK(effective_min_degree(power_path(5, 4), power_path(5, 4)) == 4);
    CHECK(effective_min_degree(power_cycle(7, 2), power_cycle(7, 2)) == 4);
    // The tight example loses exactly one unit from k + l.
    CHECK(effective_min_degree(extremal(8, 2, 2), power_path(8, 2)) == 3);
    CHECK(effective_min_degree(extremal(9, 3, 2), power_path(9, 3)) == 4);
    CHECK(effective_min_degree(extremal(9, 3, 1), power_path(9, 3)) == 3);
    // An empty graph is floored at zero.
    CHECK(effective_min_degree(LabeledGraph::empty(5), power_path(5, 1)) == 0);
}

TEST_CASE("effective minimum degree rejects non-subgraphs") {
    CHECK_THROWS_AS(
        effective_min_degree(power_path(5, 2), power_path(6, 2)),
        NotSubgraphError);
    CHECK_THROWS_AS(
        effective_min_degree(power_path(5, 3), power_path(5, 2)),
        NotSubgraphError);
}

TEST_CASE("effective minimum degree matches its defining property") {
    // Reference evaluation: the largest l such that every vertex keeps
    // degree at least min{l, deg_h(v)}, scanned over all candidate l.
    auto reference = [](const LabeledGraph& g, const LabeledGraph& h) {
        int best = 0;
        for (int ell = 0; ell <= h.max_degree(); ++ell) {
            bool ok = true;
            for (int v = 1; v <= g.n(); ++v) {
                if (g.degree(v) < std::min(ell, h.degree(v))) {
                    ok = false;
                    break;
                }
            }
            if (ok) best = ell;
        }
        return best;
    };
    Rng rng(417);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 5 + static_cast<int>(rng.below(6));
        int k = 1 + static_cast<int>(rng.below(3));
        LabeledGraph host = power_path(n, k);
        LabeledGraph g = sample_uniform_subgraph(host, 0.6, rng.u64());
        CHECK(effective_min_degree(g, host) == reference(g, host));
    }
}

TEST_CASE("effective minimum degree ignores labels") {
    Rng rng(98);
    LabeledGraph host = power_path(9, 3);
    LabeledGraph g = sample_uniform_subgraph(host, 0.7, 5);
    int base = effective_min_degree(g, host);
    for (int trial = 0; trial < 10; ++trial) {
        auto perm = testutil::random_permutation(9, rng);
        CHECK(effective_min_degree(testutil::relabel(g, perm),
                                   testutil::relabel(host, perm)) == base);
    }
}

TEST_CASE("condition thresholds") {
    auto seq = condition_thresholds(Params{9, 2, 2}, DegreeCondition::sequence);
    CHECK(seq == std::vector<int>{0, 2, 3, 4, 4, 4, 4, 4, 3, 2});
    auto eff = condition_thresholds(Params{9, 2, 2},
                                    DegreeCondition::effective);
    CHECK(eff == std::vector<int>{0, 2, 3, 4, 4, 4, 4, 4, 3, 2});
    // At k = 3 the two shapes separate near the left boundary.
    auto seq3 = condition_thresholds(Params{9, 3, 2},
                                     DegreeCondition::sequence);
    auto eff3 = condition_thresholds(Params{9, 3, 2},
                                     DegreeCondition::effective);
    CHECK(seq3[2] == 3);
    CHECK(eff3[2] == 4);
}

TEST_CASE("sequence thresholds never exceed effective thresholds when n >= 2k") {
    for (int k = 1; k <= 5; ++k) {
        for (int ell = 1; ell <= k; ++ell) {
            for (int n = std::max(2 * k, ell + 2); n <= 2 * k + 8; ++n) {
                Params p{n, k, ell};
                auto seq = condition_thresholds(p, DegreeCondition::sequence);
                auto eff = condition_thresholds(p, DegreeCondition::effective);
                for (int i = 1; i <= n; ++i) {
                    CAPTURE(n);
                    CAPTURE(k);
                    CAPTURE(ell);
                    CAPTURE(i);
                    CHECK(seq[i] <= eff[i]);
                }
            }
        }
    }
}

TEST_CASE("for n < 2k the sequence condition can be strictly stronger") {
    // On five vertices with k = l = 3 the whole graph satisfies the
    // effective condition, yet the sequence condition demands degree 5 at
    // the middle vertex, which no 5-vertex graph has.
    LabeledGraph g = power_path(5, 3);
    Params p{5, 3, 3};
    CHECK(check_subdivision_condition(g, p, DegreeCondition::effective).passed);
    auto report = check_subdivision_condition(g, p, DegreeCondition::sequence);
    CHECK_FALSE(report.passed);
    CHECK(report.first_violation->vertex == 3);
    CHECK(report.first_violation->required == 5);
    CHECK(report.first_violation->actual == 4);
}

TEST_CASE("subdivision condition on known instances") {
    SUBCASE("square of the 5-path passes at l = 2") {
        auto report = check_subdivision_condition(power_path(5, 2),
                                                  Params{5, 2, 2},
                                                  DegreeCondition::sequence);
        CHECK(report.passed);
        CHECK(report.condition_name == "sequence");
        CHECK_FALSE(report.first_violation.has_value());
    }
    SUBCASE("tight example fails at the first interior vertex") {
        auto report = check_subdivision_condition(extremal(8, 2, 2),
                                                  Params{8, 2, 2},
                                                  DegreeCondition::sequence);
        CHECK_FALSE(report.passed);
        CHECK(report.first_violation->vertex == 3);
        CHECK(report.first_violation->required == 4);
        CHECK(report.first_violation->actual == 3);
        auto eff = check_subdivision_condition(extremal(8, 2, 2),
                                               Params{8, 2, 2},
                                               DegreeCondition::effective);
        CHECK_FALSE(eff.passed);
    }
    SUBCASE("complete graph on four vertices needs witness k = 3") {
        LabeledGraph k4 = power_path(4, 3);
        CHECK_THROWS_AS(check_subdivision_condition(k4, Params{4, 2, 2},
                                                    DegreeCondition::sequence),
                        BandwidthViolatedError);
        auto report = check_subdivision_condition(k4, Params{4, 3, 2},
                                                  DegreeCondition::effective);
        CHECK(report.passed);
    }
    SUBCASE("mismatched n is rejected") {
        CHECK_THROWS_AS(check_subdivision_condition(power_path(5, 2),
                                                    Params{6, 2, 2},
                                                    DegreeCondition::sequence),
                        ParamsError);
    }
}

TEST_CASE("bandwidth violation reports an offending edge") {
    try {
        check_subdivision_condition(power_path(6, 3), Params{6, 2, 2},
                                    DegreeCondition::sequence);
        FAIL("expected BandwidthViolatedError");
    } catch (const BandwidthViolatedError& e) {
        CHECK(e.k == 2);
        CHECK(e.v - e.u > 2);
        CHECK(power_path(6, 3).has_edge(e.u, e.v));
    }
}

TEST_CASE("degree floors") {
    SUBCASE("power of a cycle meets its own floor") {
        auto report = check_degree_floor(power_cycle(7, 2), power_cycle(7, 2),
                                         2, FloorRule::cycle_power);
        CHECK(report.passed);
        CHECK(report.condition_name == "cycle_power");
    }
    SUBCASE("losing two edges at one vertex breaks the floor") {
        LabeledGraph host = power_cycle(7, 2);
        auto edges = host.edges();
        std::vector<std::pair<int, int>> kept;
        for (auto e : edges) {
            if (e != std::make_pair(1, 2) && e != std::make_pair(1, 3)) {
                kept.push_back(e);
            }
        }
        LabeledGraph g(7, kept);
        auto report = check_degree_floor(g, host, 2, FloorRule::cycle_power);
        CHECK_FALSE(report.passed);
        CHECK(report.first_violation->vertex == 1);
        CHECK(report.first_violation->required == 3);
        CHECK(report.first_violation->actual == 2);
    }
    SUBCASE("half plus two fails at the ends of low powers of the path") {
        auto report = check_degree_floor(power_path(9, 2), power_path(9, 2),
                                         2, FloorRule::half_plus_two);
        CHECK_FALSE(report.passed);
        CHECK(report.first_violation->vertex == 1);
        CHECK(report.first_violation->required == 3);
        CHECK(report.first_violation->actual == 2);
    }
    SUBCASE("half plus two is satisfiable at higher powers") {
        auto report = check_degree_floor(power_path(9, 4), power_path(9, 4),
                                         4, FloorRule::half_plus_two);
        CHECK(report.passed);
    }
    SUBCASE("non-subgraphs are rejected") {
        CHECK_THROWS_AS(check_degree_floor(power_path(7, 3), power_cycle(7, 2),
                                           2, FloorRule::cycle_power),
                        NotSubgraphError);
    }
}

TEST_CASE("condition id round trip") {
    for (auto id : {ConditionId::effective, ConditionId::sequence,
                    ConditionId::cycle_power, ConditionId::half_plus_two}) {
        auto back = condition_id_from_name(condition_id_name(id));
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK_FALSE(condition_id_from_name("nonsense").has_value());
}
