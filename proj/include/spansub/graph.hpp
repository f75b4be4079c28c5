// Core graph type and degree-condition checks.
//
// Vertices are the integers 1..n and the labelling is part of the graph's
// identity: "bandwidth at most k" always refers to the given labels, never
// to some optimal relabelling. Neighbour lists are kept sorted ascending,
// so "leftmost neighbour" scans are a linear walk and edge queries are a
// binary search.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spansub/errors.hpp"

namespace spansub {

class LabeledGraph {
public:
    // Builds the graph from undirected edges on {1..n}. Rejects n < 1,
    // endpoints out of range, self-loops, and duplicate edges.
    LabeledGraph(int n, const std::vector<std::pair<int, int>>& edges);

    static LabeledGraph empty(int n) { return LabeledGraph(n, {}); }

    int n() const { return n_; }
    int edge_count() const { return edge_count_; }
    int degree(int v) const { return static_cast<int>(adj_[check(v)].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[check(v)]; }
    bool has_edge(int u, int v) const;
    int max_degree() const;
    // All edges as (i, j) with i < j, ordered lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const LabeledGraph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    int check(int v) const;

    int n_;
    int edge_count_;
    std::vector<std::vector<int>> adj_; // adj_[0] unused
};

// Parameter triple for the spanning-subdivision machinery: n vertices,
// bandwidth witness k, and l branches. Requires k >= l >= 1 and n >= l + 2.
struct Params {
    int n;
    int k;
    int ell;

    void validate() const;
};

// Which sufficient degree condition to test.
//   effective: deg(v) >= min{k + l, deg of v in the k-th power of the path},
//              equivalently an effective minimum degree of at least k + l.
//   sequence:  deg(v_i) >= min{l + i - 1, k + l, k + n - i}, which admits
//              low degrees near both ends of the labelling.
enum class DegreeCondition { effective, sequence };

// Conjectured degree floors the counterexample hunter probes.
//   cycle_power:   deg(v) >= k + 1 inside the k-th power of a cycle.
//   half_plus_two: deg(v) >= ceil(host_deg(v) / 2) + 2 inside a host.
enum class FloorRule { cycle_power, half_plus_two };

// Uniform handle on all four per-vertex threshold families; used by the
// condition-respecting sampler and the CLI.
enum class ConditionId { effective, sequence, cycle_power, half_plus_two };

struct DegreeViolation {
    int vertex;
    int required;
    int actual;
};

struct ConditionReport {
    std::string condition_name;
    bool passed = false;
    // Violation at the smallest failing vertex label, when !passed.
    std::optional<DegreeViolation> first_violation;
};

// Raised by operations that need a passing report to proceed.
struct ConditionFailedError : Error {
    ConditionFailedError(const std::string& msg, ConditionReport report)
        : Error(msg), report(std::move(report)) {}
    ConditionReport report;
};

// True iff every edge uv satisfies |u - v| <= k.
bool bandwidth_witness_ok(const LabeledGraph& g, int k);

// Degree of vertex i in the k-th power of the path on n vertices:
// min{i - 1, k} + min{n - i, k}.
int power_path_degree(int n, int k, int i);

// Largest l such that every vertex v has deg_g(v) >= min{l, deg_h(v)}.
// Values above the maximum degree of h are indistinguishable, so the result
// is capped there; in particular the host's own value is its maximum degree.
// Throws NotSubgraphError unless g is a spanning subgraph of h.
int effective_min_degree(const LabeledGraph& g, const LabeledGraph& h);

// Per-vertex thresholds (index 1..n; slot 0 unused) for the two sufficient
// conditions at parameters p.
std::vector<int> condition_thresholds(const Params& p, DegreeCondition which);

// Per-vertex thresholds for a conjectured floor over the given host; k is
// only read by FloorRule::cycle_power.
std::vector<int> floor_thresholds(const LabeledGraph& host, int k,
                                  FloorRule rule);

// Checks the chosen sufficient condition on g at parameters p. The bandwidth
// witness is a precondition: throws BandwidthViolatedError if some edge
// stretches past k, because the thresholds are meaningless then. On failure
// the report names the smallest violating vertex.
ConditionReport check_subdivision_condition(const LabeledGraph& g,
                                            const Params& p,
                                            DegreeCondition which);

// Checks a conjectured degree floor for g inside host. Throws
// NotSubgraphError unless g is a spanning subgraph of host.
ConditionReport check_degree_floor(const LabeledGraph& g,
                                   const LabeledGraph& host, int k,
                                   FloorRule rule);

// Threshold vector for any ConditionId; dispatches to the two helpers above.
// host is only read by the floor rules.
std::vector<int> thresholds_for(const ConditionId id, const LabeledGraph& host,
                                const Params& p);

const char* condition_id_name(ConditionId id);
std::optional<ConditionId> condition_id_from_name(const std::string& name);

} // namespace spansub
