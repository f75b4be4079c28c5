// Greedy constructive engine. Grows l vertex-disjoint oriented paths across
// a low-bandwidth graph by always advancing the leftmost live endpoint to
// its leftmost uncovered neighbour, then assembles the paths into a spanning
// subdivision of the complete bipartite graph K_{2,l} rooted at v_1 and v_n
// (a Hamilton cycle when l = 2, a Hamilton path when l = 1).
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spansub/graph.hpp"

namespace spansub {

struct OrientedPath {
    std::vector<int> vertices;
    // Vertex at which the path stopped growing, once all of the endpoint's
    // neighbours were covered. Unset while the path is live.
    std::optional<int> crashed_at;
};

// The l paths in start order: path 0 starts at v_1 and paths 1..l-1 start at
// the l - 1 leftmost neighbours of v_1, ascending.
struct PathSystem {
    Params params;
    std::vector<OrientedPath> paths;
};

struct TraceStep {
    int step;               // 1-based loop counter
    int endpoint;           // leftmost live endpoint chosen this iteration
    bool crashed;           // no uncovered neighbour remained
    int extended_to;        // new endpoint when !crashed, else 0
    std::vector<int> active_endpoints; // live endpoints before the move, ascending
};

struct BuildTrace {
    std::vector<TraceStep> steps;
};

// Subdivision of K_{2,l} rooted at (root_u, root_w): l branches, each a path
// root_u .. root_w with at least one internal vertex, internally disjoint.
struct RootedSubdivision {
    int root_u;
    int root_w;
    std::vector<std::vector<int>> branches;
};

// Runs the greedy growth loop to completion. Requires only that vertex 1
// has at least l neighbours (RootDegreeTooSmallError otherwise); on inputs
// that fail the degree conditions which guarantee success, the returned
// system may leave vertices uncovered. Fully deterministic. When trace is
// non-null, appends one TraceStep per loop iteration.
PathSystem grow_paths(const LabeledGraph& g, const Params& p,
                      BuildTrace* trace = nullptr);

// Reconstructs the PathSystem by replaying a recorded trace step by step.
// Throws Error if the trace is inconsistent with (g, p).
PathSystem apply_trace(const LabeledGraph& g, const Params& p,
                       const BuildTrace& trace);

// Joins the grown paths into a subdivision rooted at (v_1, v_n): a path not
// starting at v_1 is prefixed with it, and a path not ending at v_n must end
// at a neighbour of v_n, which is then appended. Checks coverage first and
// reports the smallest uncovered vertex (AssemblyError::Kind::coverage_gap);
// then any path whose last vertex is not adjacent to v_n triggers
// Kind::endpoint_not_adjacent_to_last_vertex.
RootedSubdivision assemble(const LabeledGraph& g, const Params& p,
                           const PathSystem& ps);

// The two-branch subdivision read as a cycle: first branch forward, second
// branch backward without its endpoints. Requires l = 2.
std::vector<int> cycle_from_subdivision(const RootedSubdivision& s);

// The single branch of an l = 1 subdivision, a Hamilton path v_1 .. v_n.
std::vector<int> path_from_subdivision(const RootedSubdivision& s);

// Convenience pipeline at l = 2: checks the chosen sufficient condition
// (ConditionFailedError on failure, ParamsError unless p.ell == 2), then
// grows, assembles, and returns the Hamilton cycle starting at v_1.
std::vector<int> hamilton_cycle(const LabeledGraph& g, const Params& p,
                                DegreeCondition which);

// Same pipeline at l = 1, returning the Hamilton path from v_1 to v_n.
std::vector<int> hamilton_path(const LabeledGraph& g, const Params& p,
                               DegreeCondition which);

} // namespace spansub
