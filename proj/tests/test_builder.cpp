#include "doctest.h"

#include <algorithm>

#include "spansub/builder.hpp"
#include "spansub/constructions.hpp"
#include "spansub/oracle.hpp"
#include "test_util.hpp"

using namespace spansub;

namespace {

std::vector<int> crash_vertices(const PathSystem& ps) {
    std::vector<int> out;
    for (const auto& path : ps.paths) {
        REQUIRE(path.crashed_at.has_value());
        out.push_back(*path.crashed_at);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("growth on the square of the 5-path, step by step") {
    LabeledGraph g = power_path(5, 2);
    Params p{5, 2, 2};
    BuildTrace trace;
    PathSystem ps = grow_paths(g, p, &trace);

    REQUIRE(ps.paths.size() == 2);
    CHECK(ps.paths[0].vertices == std::vector<int>{1, 3, 5});
    CHECK(ps.paths[0].crashed_at == 5);
    CHECK(ps.paths[1].vertices == std::vector<int>{2, 4});
    CHECK(ps.paths[1].crashed_at == 4);

    REQUIRE(trace.steps.size() == 5);
    CHECK(trace.steps[0].endpoint == 1);
    CHECK(trace.steps[0].extended_to == 3);
    CHECK(trace.steps[0].active_endpoints == std::vector<int>{1, 2});
    CHECK(trace.steps[1].endpoint == 2);
    CHECK(trace.steps[1].extended_to == 4);
    CHECK(trace.steps[2].endpoint == 3);
    CHECK(trace.steps[2].extended_to == 5);
    CHECK(trace.steps[3].endpoint == 4);
    CHECK(trace.steps[3].crashed);
    CHECK(trace.steps[4].endpoint == 5);
    CHECK(trace.steps[4].crashed);

    RootedSubdivision s = assemble(g, p, ps);
    CHECK(s.root_u == 1);
    CHECK(s.root_w == 5);
    REQUIRE(s.branches.size() == 2);
    CHECK(s.branches[0] == std::vector<int>{1, 3, 5});
    CHECK(s.branches[1] == std::vector<int>{1, 2, 4, 5});
    CHECK(verify_subdivision(g, s, 2).ok);

    std::vector<int> cycle = cycle_from_subdivision(s);
    CHECK(cycle == std::vector<int>{1, 3, 5, 4, 2});
    CHECK(is_valid_hamilton_cycle(g, cycle));
}

TEST_CASE("the plain path grows the identity Hamilton path") {
    for (int n = 3; n <= 10; ++n) {
        LabeledGraph g = power_path(n, 1);
        std::vector<int> path = hamilton_path(g, Params{n, 1, 1},
                                              DegreeCondition::sequence);
        std::vector<int> identity(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) identity[i] = i + 1;
        CHECK(path == identity);
    }
}

TEST_CASE("known cycles") {
    SUBCASE("square of the 9-path zigzags") {
        std::vector<int> cycle = hamilton_cycle(power_path(9, 2),
                                                Params{9, 2, 2},
                                                DegreeCondition::sequence);
        CHECK(cycle == std::vector<int>{1, 3, 5, 7, 9, 8, 6, 4, 2});
    }
    SUBCASE("complete graph on four vertices") {
        LabeledGraph k4 = power_path(4, 3);
        std::vector<int> cycle = hamilton_cycle(k4, Params{4, 3, 2},
                                                DegreeCondition::effective);
        CHECK(is_valid_hamilton_cycle(k4, cycle));
        CHECK(cycle == std::vector<int>{1, 3, 4, 2});
    }
}

TEST_CASE("growth is deterministic") {
    LabeledGraph g = sample_condition_subgraph(power_path(11, 3),
                                               Params{11, 3, 2},
                                               ConditionId::sequence, 42);
    BuildTrace t1, t2;
    PathSystem a = grow_paths(g, Params{11, 3, 2}, &t1);
    PathSystem b = grow_paths(g, Params{11, 3, 2}, &t2);
    REQUIRE(a.paths.size() == b.paths.size());
    for (std::size_t j = 0; j < a.paths.size(); ++j) {
        CHECK(a.paths[j].vertices == b.paths[j].vertices);
        CHECK(a.paths[j].crashed_at == b.paths[j].crashed_at);
    }
    REQUIRE(t1.steps.size() == t2.steps.size());
    for (std::size_t i = 0; i < t1.steps.size(); ++i) {
        CHECK(t1.steps[i].endpoint == t2.steps[i].endpoint);
        CHECK(t1.steps[i].crashed == t2.steps[i].crashed);
        CHECK(t1.steps[i].extended_to == t2.steps[i].extended_to);
        CHECK(t1.steps[i].active_endpoints == t2.steps[i].active_endpoints);
    }
}

TEST_CASE("replaying a trace reconstructs the path system") {
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        int k = 2 + static_cast<int>(rng.below(3));
        int ell = 1 + static_cast<int>(rng.below(std::min(k, 3)));
        int n = std::max(2 * k, ell + 2) + static_cast<int>(rng.below(6));
        Params p{n, k, ell};
        LabeledGraph host = power_path(n, k);
        bool vacuous = false;
        auto thr = condition_thresholds(p, DegreeCondition::sequence);
        for (int v = 1; v <= n; ++v) {
            if (host.degree(v) < thr[v]) vacuous = true;
        }
        if (vacuous) continue;
        LabeledGraph g = sample_condition_subgraph(host, p,
                                                   ConditionId::sequence,
                                                   rng.u64());
        BuildTrace trace;
        PathSystem grown = grow_paths(g, p, &trace);
        PathSystem replayed = apply_trace(g, p, trace);
        REQUIRE(replayed.paths.size() == grown.paths.size());
        for (std::size_t j = 0; j < grown.paths.size(); ++j) {
            CHECK(replayed.paths[j].vertices == grown.paths[j].vertices);
            CHECK(replayed.paths[j].crashed_at == grown.paths[j].crashed_at);
        }
    }
}

TEST_CASE("under the sequence condition the growth laws hold") {
    // Crashes land exactly on the last l vertices, every vertex is covered,
    // and the assembled subdivision always verifies.
    std::vector<Params> cells = {{9, 2, 2},  {9, 3, 2}, {10, 3, 3},
                                 {12, 4, 3}, {8, 2, 1}, {7, 3, 1},
                                 {11, 4, 4}};
    for (const Params& p : cells) {
        LabeledGraph host = power_path(p.n, p.k);
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            CAPTURE(p.n);
            CAPTURE(p.k);
            CAPTURE(p.ell);
            CAPTURE(seed);
            LabeledGraph g = sample_condition_subgraph(host, p,
                                                       ConditionId::sequence,
                                                       seed);
            BuildTrace trace;
            PathSystem ps = grow_paths(g, p, &trace);
            std::vector<int> expected_crashes;
            for (int v = p.n - p.ell + 1; v <= p.n; ++v) {
                expected_crashes.push_back(v);
            }
            CHECK(crash_vertices(ps) == expected_crashes);
            // The loop makes one extension per newly covered vertex plus one
            // crash per path.
            CHECK(trace.steps.size() ==
                  static_cast<std::size_t>(p.n - p.ell + p.ell));
            RootedSubdivision s = assemble(g, p, ps);
            CHECK(verify_subdivision(g, s, p.ell).ok);
            if (p.ell == 2) {
                CHECK(is_valid_hamilton_cycle(g, cycle_from_subdivision(s)));
            } else if (p.ell == 1) {
                CHECK(is_valid_hamilton_path(g, path_from_subdivision(s), 1,
                                             p.n));
            }
        }
    }
}

TEST_CASE("path starts are vertex 1 plus its leftmost neighbours") {
    LabeledGraph g = sample_condition_subgraph(power_path(12, 4),
                                               Params{12, 4, 4},
                                               ConditionId::sequence, 5);
    PathSystem ps = grow_paths(g, Params{12, 4, 4});
    REQUIRE(ps.paths.size() == 4);
    CHECK(ps.paths[0].vertices.front() == 1);
    const auto& nb = g.neighbors(1);
    REQUIRE(nb.size() >= 3);
    CHECK(ps.paths[1].vertices.front() == nb[0]);
    CHECK(ps.paths[2].vertices.front() == nb[1]);
    CHECK(ps.paths[3].vertices.front() == nb[2]);
}

TEST_CASE("root degree below l is rejected") {
    // Vertex 1 has a single neighbour but two starts are required.
    LabeledGraph g(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 4}, {3, 5}});
    CHECK_THROWS_AS(grow_paths(g, Params{5, 2, 2}), RootDegreeTooSmallError);
    try {
        grow_paths(g, Params{5, 2, 2});
    } catch (const RootDegreeTooSmallError& e) {
        CHECK(e.degree == 1);
        CHECK(e.ell == 2);
    }
}

TEST_CASE("growth runs on non-qualifying inputs and assembly reports failure") {
    // The tight example fails the condition; the grower still runs
    // deterministically, covers everything, and assembly then discovers the
    // stranded left block.
    LabeledGraph g = extremal(8, 2, 2);
    Params p{8, 2, 2};
    PathSystem ps = grow_paths(g, p);
    REQUIRE(ps.paths.size() == 2);
    CHECK(ps.paths[0].vertices == std::vector<int>{1, 3});
    CHECK(ps.paths[0].crashed_at == 3);
    CHECK(ps.paths[1].vertices == std::vector<int>{2, 4, 5, 6, 7, 8});
    CHECK(ps.paths[1].crashed_at == 8);
    try {
        assemble(g, p, ps);
        FAIL("expected AssemblyError");
    } catch (const AssemblyError& e) {
        CHECK(e.kind ==
              AssemblyError::Kind::endpoint_not_adjacent_to_last_vertex);
        CHECK(e.vertex == 3);
    }
}

TEST_CASE("assembly checks coverage before endpoint adjacency") {
    LabeledGraph g(4, {{1, 2}, {2, 3}, {3, 4}, {1, 3}});
    // Doctored system missing vertex 4 with a bad endpoint: the smaller
    // uncovered vertex wins.
    PathSystem ps;
    ps.params = Params{4, 3, 1};
    ps.paths.push_back(OrientedPath{{1, 3, 2}, 2});
    try {
        assemble(g, ps.params, ps);
        FAIL("expected AssemblyError");
    } catch (const AssemblyError& e) {
        CHECK(e.kind == AssemblyError::Kind::coverage_gap);
        CHECK(e.vertex == 4);
    }
    // Full coverage but the path ends away from the last vertex.
    PathSystem ps2;
    ps2.params = Params{4, 3, 1};
    ps2.paths.push_back(OrientedPath{{1, 4, 3, 2}, 2});
    try {
        assemble(g, ps2.params, ps2);
        FAIL("expected AssemblyError");
    } catch (const AssemblyError& e) {
        CHECK(e.kind ==
              AssemblyError::Kind::endpoint_not_adjacent_to_last_vertex);
        CHECK(e.vertex == 2);
    }
}

TEST_CASE("pipeline guards") {
    CHECK_THROWS_AS(hamilton_cycle(power_path(9, 2), Params{9, 2, 1},
                                   DegreeCondition::sequence),
                    ParamsError);
    CHECK_THROWS_AS(hamilton_path(power_path(9, 2), Params{9, 2, 2},
                                  DegreeCondition::sequence),
                    ParamsError);
    CHECK_THROWS_AS(hamilton_cycle(extremal(8, 2, 2), Params{8, 2, 2},
                                   DegreeCondition::sequence),
                    ConditionFailedError);
    try {
        hamilton_cycle(extremal(8, 2, 2), Params{8, 2, 2},
                       DegreeCondition::sequence);
    } catch (const ConditionFailedError& e) {
        CHECK(e.report.first_violation->vertex == 3);
    }
}
