// Deterministic graph families and seeded samplers used by the experiments.
#pragma once

#include <cstdint>
#include <vector>

#include "spansub/graph.hpp"

namespace spansub {

// k-th power of the path v_1..v_n: edge iff |i - j| <= k. For k >= n - 1
// this is the complete graph. Requires n >= 1, k >= 1.
LabeledGraph power_path(int n, int k);

// k-th power of the cycle v_1..v_n: edge iff the circular distance is at
// most k. Requires n >= 3 and 1 <= k <= n / 2 so that no edge is doubled.
LabeledGraph power_cycle(int n, int k);

// Tight example showing the k + l bound cannot drop: the union of the k-th
// power of the path on v_1..v_{k+l} and the k-th power of the path on
// v_{k+2}..v_n. Its effective minimum degree inside power_path(n, k) is
// exactly k + l - 1, yet {v_{k+2}, ..., v_{k+l}} is an (l - 1)-vertex cut
// between v_1 and v_n, so no l-branch subdivision rooted there fits. For
// l = 1 the two blocks share no vertex and the graph is disconnected.
// Requires k >= l >= 1 and n >= 2k + l + 1.
LabeledGraph extremal(int n, int k, int ell);

// Deletes edges of g in a seeded random order, keeping an edge whenever its
// removal would drop an endpoint below floors[vertex]. One pass; the result
// is determined by (g, floors, seed).
LabeledGraph delete_edges_greedy(const LabeledGraph& g,
                                 const std::vector<int>& floors,
                                 std::uint64_t seed);

// Random spanning subgraph of host that still satisfies the chosen condition
// thresholds. Throws HostFailsConditionError when the host itself does not,
// since then no subgraph can. Deterministic in (host, p, condition, seed).
LabeledGraph sample_condition_subgraph(const LabeledGraph& host,
                                       const Params& p, ConditionId condition,
                                       std::uint64_t seed);

// Spanning subgraph keeping each edge independently with probability
// keep_prob; no condition is enforced. Used to exercise negative paths.
LabeledGraph sample_uniform_subgraph(const LabeledGraph& host,
                                     double keep_prob, std::uint64_t seed);

} // namespace spansub
