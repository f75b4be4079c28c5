#include "spansub/constructions.hpp"

#include <algorithm>
#include <string>

#include "spansub/rng.hpp"

namespace spansub {

LabeledGraph power_path(int n, int k) {
    if (n < 1 || k < 1) {
        throw ParamsError("power_path needs n >= 1 and k >= 1, got n=" +
                          std::to_string(n) + " k=" + std::to_string(k));
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n && j - i <= k; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return LabeledGraph(n, edges);
}

LabeledGraph power_cycle(int n, int k) {
    if (n < 3 || k < 1 || 2 * k > n) {
        throw ParamsError("power_cycle needs n >= 3 and 1 <= k <= n/2, got n=" +
                          std::to_string(n) + " k=" + std::to_string(k));
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            int d = j - i;
            if (std::min(d, n - d) <= k) edges.emplace_back(i, j);
        }
    }
    return LabeledGraph(n, edges);
}

LabeledGraph extremal(int n, int k, int ell) {
    if (ell < 1 || k < ell || n < 2 * k + ell + 1) {
        throw ParamsError(
            "extremal needs k >= l >= 1 and n >= 2k + l + 1, got n=" +
            std::to_string(n) + " k=" + std::to_string(k) +
            " l=" + std::to_string(ell));
    }
    std::vector<std::pair<int, int>> edges;
    // Block one: v_1..v_{k+l}. Block two: v_{k+2}..v_n. They overlap in
    // v_{k+2}..v_{k+l} (empty when l = 1); an edge inside the overlap lies in
    // both blocks and must be emitted once.
    for (int i = 1; i <= k + ell; ++i) {
        for (int j = i + 1; j <= k + ell && j - i <= k; ++j) {
            edges.emplace_back(i, j);
        }
    }
    for (int i = k + 2; i <= n; ++i) {
        for (int j = i + 1; j <= n && j - i <= k; ++j) {
            if (j <= k + ell) continue;
            edges.emplace_back(i, j);
        }
    }
    return LabeledGraph(n, edges);
}

LabeledGraph delete_edges_greedy(const LabeledGraph& g,
                                 const std::vector<int>& floors,
                                 std::uint64_t seed) {
    auto edges = g.edges();
    Rng rng(seed);
    rng.shuffle(edges);
    std::vector<int> deg(static_cast<std::size_t>(g.n()) + 1, 0);
    for (int v = 1; v <= g.n(); ++v) deg[v] = g.degree(v);
    std::vector<char> kept(edges.size(), 1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        if (deg[u] > floors[u] && deg[v] > floors[v]) {
            kept[e] = 0;
            --deg[u];
            --deg[v];
        }
    }
    std::vector<std::pair<int, int>> remaining;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (kept[e]) remaining.push_back(edges[e]);
    }
    return LabeledGraph(g.n(), remaining);
}

LabeledGraph sample_condition_subgraph(const LabeledGraph& host,
                                       const Params& p, ConditionId condition,
                                       std::uint64_t seed) {
    p.validate();
    if (p.n != host.n()) {
        throw ParamsError("params carry n=" + std::to_string(p.n) +
                          " but the host has n=" + std::to_string(host.n()));
    }
    auto floors = thresholds_for(condition, host, p);
    for (int v = 1; v <= host.n(); ++v) {
        if (host.degree(v) < floors[v]) {
            throw HostFailsConditionError(
                "host fails the " +
                std::string(condition_id_name(condition)) +
                " condition at vertex " + std::to_string(v) + " (required " +
                std::to_string(floors[v]) + ", has " +
                std::to_string(host.degree(v)) + ")");
        }
    }
    return delete_edges_greedy(host, floors, seed);
}

LabeledGraph sample_uniform_subgraph(const LabeledGraph& host,
                                     double keep_prob, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> kept;
    for (auto e : host.edges()) {
        if (rng.real01() < keep_prob) kept.push_back(e);
    }
    return LabeledGraph(host.n(), kept);
}

} // namespace spansub
