#include "spansub/builder.hpp"

#include <algorithm>
#include <string>

namespace spansub {

namespace {

// Smallest live endpoint and its path index.
std::pair<int, int> leftmost_live(const std::vector<OrientedPath>& paths) {
    int best_v = 0, best_j = -1;
    for (int j = 0; j < static_cast<int>(paths.size()); ++j) {
        if (paths[j].crashed_at) continue;
        int v = paths[j].vertices.back();
        if (best_j < 0 || v < best_v) {
            best_v = v;
            best_j = j;
        }
    }
    return {best_v, best_j};
}

} // namespace

PathSystem grow_paths(const LabeledGraph& g, const Params& p,
                      BuildTrace* trace) {
    p.validate();
    if (p.n != g.n()) {
        throw ParamsError("params carry n=" + std::to_string(p.n) +
                          " but the graph has n=" + std::to_string(g.n()));
    }
    if (g.degree(1) < p.ell) {
        throw RootDegreeTooSmallError(
            "vertex 1 has degree " + std::to_string(g.degree(1)) +
                " but " + std::to_string(p.ell) + " path starts are needed",
            g.degree(1), p.ell);
    }

    PathSystem ps;
    ps.params = p;
    ps.paths.resize(static_cast<std::size_t>(p.ell));
    std::vector<char> covered(static_cast<std::size_t>(p.n) + 1, 0);
    ps.paths[0].vertices = {1};
    covered[1] = 1;
    const auto& nb1 = g.neighbors(1);
    for (int j = 1; j < p.ell; ++j) {
        ps.paths[j].vertices = {nb1[j - 1]};
        covered[nb1[j - 1]] = 1;
    }

    int live = p.ell;
    int covered_count = p.ell;
    int step = 0;
    while (live > 0) {
        ++step;
        auto [v, j] = leftmost_live(ps.paths);
        TraceStep ts;
        if (trace) {
            ts.step = step;
            ts.endpoint = v;
            for (const auto& path : ps.paths) {
                if (!path.crashed_at) {
                    ts.active_endpoints.push_back(path.vertices.back());
                }
            }
            std::sort(ts.active_endpoints.begin(), ts.active_endpoints.end());
        }
        int next = 0;
        for (int u : g.neighbors(v)) {
            if (!covered[u]) {
                next = u;
                break;
            }
        }
        if (next == 0) {
            ps.paths[j].crashed_at = v;
            --live;
            if (trace) {
                ts.crashed = true;
                ts.extended_to = 0;
            }
        } else {
            ps.paths[j].vertices.push_back(next);
            covered[next] = 1;
            ++covered_count;
            if (trace) {
                ts.crashed = false;
                ts.extended_to = next;
            }
        }
        if (trace) trace->steps.push_back(std::move(ts));
        // Progress invariant: every iteration either crashes a path or
        // covers a new vertex, so the loop runs at most n times.
        if (step > p.n) {
            throw Error("growth loop failed to make progress");
        }
    }
    (void)covered_count;
    return ps;
}

PathSystem apply_trace(const LabeledGraph& g, const Params& p,
                       const BuildTrace& trace) {
    p.validate();
    if (g.degree(1) < p.ell) {
        throw RootDegreeTooSmallError(
            "vertex 1 has degree " + std::to_string(g.degree(1)) +
                " but " + std::to_string(p.ell) + " path starts are needed",
            g.degree(1), p.ell);
    }
    PathSystem ps;
    ps.params = p;
    ps.paths.resize(static_cast<std::size_t>(p.ell));
    ps.paths[0].vertices = {1};
    const auto& nb1 = g.neighbors(1);
    for (int j = 1; j < p.ell; ++j) {
        ps.paths[j].vertices = {nb1[j - 1]};
    }
    for (const auto& ts : trace.steps) {
        int j = -1;
        for (int i = 0; i < p.ell; ++i) {
            if (!ps.paths[i].crashed_at &&
                ps.paths[i].vertices.back() == ts.endpoint) {
                j = i;
                break;
            }
        }
        if (j < 0) {
            throw Error("trace step " + std::to_string(ts.step) +
                        " names endpoint " + std::to_string(ts.endpoint) +
                        " which no live path has");
        }
        if (ts.crashed) {
            ps.paths[j].crashed_at = ts.endpoint;
        } else {
            if (!g.has_edge(ts.endpoint, ts.extended_to)) {
                throw Error("trace step " + std::to_string(ts.step) +
                            " extends along a missing edge");
            }
            ps.paths[j].vertices.push_back(ts.extended_to);
        }
    }
    return ps;
}

RootedSubdivision assemble(const LabeledGraph& g, const Params& p,
                           const PathSystem& ps) {
    p.validate();
    if (static_cast<int>(ps.paths.size()) != p.ell) {
        throw ParamsError("path system has " +
                          std::to_string(ps.paths.size()) + " paths, expected " +
                          std::to_string(p.ell));
    }
    const int n = g.n();
    std::vector<char> covered(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& path : ps.paths) {
        for (int v : path.vertices) covered[v] = 1;
    }
    for (int v = 1; v <= n; ++v) {
        if (!covered[v]) {
            throw AssemblyError("vertex " + std::to_string(v) +
                                    " is not covered by any path",
                                AssemblyError::Kind::coverage_gap, v);
        }
    }

    RootedSubdivision s;
    s.root_u = 1;
    s.root_w = n;
    for (const auto& path : ps.paths) {
        std::vector<int> branch = path.vertices;
        if (branch.front() != 1) {
            if (!g.has_edge(1, branch.front())) {
                throw ParamsError("path system start " +
                                  std::to_string(branch.front()) +
                                  " is not a neighbour of vertex 1");
            }
            branch.insert(branch.begin(), 1);
        }
        if (branch.back() != n) {
            if (!g.has_edge(branch.back(), n)) {
                throw AssemblyError(
                    "path endpoint " + std::to_string(branch.back()) +
                        " is not adjacent to vertex " + std::to_string(n),
                    AssemblyError::Kind::endpoint_not_adjacent_to_last_vertex,
                    branch.back());
            }
            branch.push_back(n);
        }
        s.branches.push_back(std::move(branch));
    }
    return s;
}

std::vector<int> cycle_from_subdivision(const RootedSubdivision& s) {
    if (s.branches.size() != 2) {
        throw ParamsError("a cycle needs exactly 2 branches, got " +
                          std::to_string(s.branches.size()));
    }
    std::vector<int> cycle = s.branches[0];
    const auto& back = s.branches[1];
    for (std::size_t i = back.size() - 1; i-- > 1;) {
        cycle.push_back(back[i]);
    }
    return cycle;
}

std::vector<int> path_from_subdivision(const RootedSubdivision& s) {
    if (s.branches.size() != 1) {
        throw ParamsError("a path needs exactly 1 branch, got " +
                          std::to_string(s.branches.size()));
    }
    return s.branches[0];
}

namespace {

std::vector<int> run_pipeline(const LabeledGraph& g, const Params& p,
                              DegreeCondition which, int ell_required) {
    if (p.ell != ell_required) {
        throw ParamsError("pipeline requires l=" +
                          std::to_string(ell_required) + ", got l=" +
                          std::to_string(p.ell));
    }
    ConditionReport report = check_subdivision_condition(g, p, which);
    if (!report.passed) {
        const auto& v = *report.first_violation;
        throw ConditionFailedError(
            "the " + report.condition_name + " condition fails at vertex " +
                std::to_string(v.vertex) + " (required " +
                std::to_string(v.required) + ", has " +
                std::to_string(v.actual) + ")",
            report);
    }
    PathSystem ps = grow_paths(g, p);
    RootedSubdivision s = assemble(g, p, ps);
    return ell_required == 2 ? cycle_from_subdivision(s)
                             : path_from_subdivision(s);
}

} // namespace

std::vector<int> hamilton_cycle(const LabeledGraph& g, const Params& p,
                                DegreeCondition which) {
    return run_pipeline(g, p, which, 2);
}

std::vector<int> hamilton_path(const LabeledGraph& g, const Params& p,
                               DegreeCondition which) {
    return run_pipeline(g, p, which, 1);
}

} // namespace spansub
