#include "spansub/graph.hpp"

#include <algorithm>
#include <string>

namespace spansub {

LabeledGraph::LabeledGraph(int n, const std::vector<std::pair<int, int>>& edges)
    : n_(n), edge_count_(0) {
    if (n < 1) {
        throw ParamsError("graph needs at least one vertex, got n=" +
                          std::to_string(n));
    }
    adj_.assign(static_cast<std::size_t>(n) + 1, {});
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n) {
            throw ParamsError("edge (" + std::to_string(u) + ", " +
                              std::to_string(v) + ") leaves vertex range 1.." +
                              std::to_string(n));
        }
        if (u == v) {
            throw ParamsError("self-loop at vertex " + std::to_string(u));
        }
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++edge_count_;
    }
    for (int v = 1; v <= n_; ++v) {
        auto& nb = adj_[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
            throw ParamsError("duplicate edge at vertex " + std::to_string(v));
        }
    }
}

bool LabeledGraph::has_edge(int u, int v) const {
    const auto& nb = adj_[check(u)];
    check(v);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int LabeledGraph::max_degree() const {
    int best = 0;
    for (int v = 1; v <= n_; ++v) {
        best = std::max(best, degree(v));
    }
    return best;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 1; u <= n_; ++u) {
        for (int v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

int LabeledGraph::check(int v) const {
    if (v < 1 || v > n_) {
        throw ParamsError("vertex " + std::to_string(v) +
                          " out of range 1.." + std::to_string(n_));
    }
    return v;
}

void Params::validate() const {
    if (ell < 1 || k < ell || n < ell + 2) {
        throw ParamsError("params require k >= l >= 1 and n >= l + 2, got n=" +
                          std::to_string(n) + " k=" + std::to_string(k) +
                          " l=" + std::to_string(ell));
    }
}

bool bandwidth_witness_ok(const LabeledGraph& g, int k) {
    for (int v = 1; v <= g.n(); ++v) {
        const auto& nb = g.neighbors(v);
        // Sorted neighbours: only the extremes can stretch furthest.
        if (!nb.empty() && (v - nb.front() > k || nb.back() - v > k)) {
            return false;
        }
    }
    return true;
}

int power_path_degree(int n, int k, int i) {
    return std::min(i - 1, k) + std::min(n - i, k);
}

int effective_min_degree(const LabeledGraph& g, const LabeledGraph& h) {
    if (g.n() != h.n()) {
        throw NotSubgraphError("vertex counts differ: " +
                               std::to_string(g.n()) + " vs " +
                               std::to_string(h.n()));
    }
    for (int v = 1; v <= g.n(); ++v) {
        for (int u : g.neighbors(v)) {
            if (u > v && !h.has_edge(u, v)) {
                throw NotSubgraphError("edge (" + std::to_string(v) + ", " +
                                       std::to_string(u) +
                                       ") is missing from the host");
            }
        }
    }
    int best = h.max_degree();
    for (int v = 1; v <= g.n(); ++v) {
        // The constraint min{l, deg_h(v)} <= deg_g(v) only binds once the
        // vertex has lost a neighbour; untouched vertices allow any l.
        if (g.degree(v) < h.degree(v)) {
            best = std::min(best, g.degree(v));
        }
    }
    return best;
}

std::vector<int> condition_thresholds(const Params& p, DegreeCondition which) {
    p.validate();
    std::vector<int> thr(static_cast<std::size_t>(p.n) + 1, 0);
    for (int i = 1; i <= p.n; ++i) {
        if (which == DegreeCondition::effective) {
            thr[i] = std::min(p.k + p.ell, power_path_degree(p.n, p.k, i));
        } else {
            thr[i] = std::min({p.ell + i - 1, p.k + p.ell, p.k + p.n - i});
        }
    }
    return thr;
}

std::vector<int> floor_thresholds(const LabeledGraph& host, int k,
                                  FloorRule rule) {
    std::vector<int> thr(static_cast<std::size_t>(host.n()) + 1, 0);
    for (int v = 1; v <= host.n(); ++v) {
        if (rule == FloorRule::cycle_power) {
            thr[v] = k + 1;
        } else {
            thr[v] = (host.degree(v) + 1) / 2 + 2;
        }
    }
    return thr;
}

namespace {

ConditionReport scan_thresholds(const LabeledGraph& g,
                                const std::vector<int>& thr,
                                std::string name) {
    ConditionReport report;
    report.condition_name = std::move(name);
    report.passed = true;
    for (int v = 1; v <= g.n(); ++v) {
        if (g.degree(v) < thr[v]) {
            report.passed = false;
            report.first_violation = DegreeViolation{v, thr[v], g.degree(v)};
            break;
        }
    }
    return report;
}

} // namespace

ConditionReport check_subdivision_condition(const LabeledGraph& g,
                                            const Params& p,
                                            DegreeCondition which) {
    p.validate();
    if (p.n != g.n()) {
        throw ParamsError("params carry n=" + std::to_string(p.n) +
                          " but the graph has n=" + std::to_string(g.n()));
    }
    if (!bandwidth_witness_ok(g, p.k)) {
        for (int v = 1; v <= g.n(); ++v) {
            const auto& nb = g.neighbors(v);
            if (!nb.empty() && nb.back() - v > p.k) {
                throw BandwidthViolatedError(
                    "edge (" + std::to_string(v) + ", " +
                        std::to_string(nb.back()) +
                        ") stretches past the bandwidth witness k=" +
                        std::to_string(p.k),
                    v, nb.back(), p.k);
            }
        }
    }
    return scan_thresholds(g, condition_thresholds(p, which),
                           which == DegreeCondition::effective
                               ? "effective"
                               : "sequence");
}

ConditionReport check_degree_floor(const LabeledGraph& g,
                                   const LabeledGraph& host, int k,
                                   FloorRule rule) {
    if (g.n() != host.n()) {
        throw NotSubgraphError("vertex counts differ: " +
                               std::to_string(g.n()) + " vs " +
                               std::to_string(host.n()));
    }
    for (int v = 1; v <= g.n(); ++v) {
        for (int u : g.neighbors(v)) {
            if (u > v && !host.has_edge(u, v)) {
                throw NotSubgraphError("edge (" + std::to_string(v) + ", " +
                                       std::to_string(u) +
                                       ") is missing from the host");
            }
        }
    }
    return scan_thresholds(g, floor_thresholds(host, k, rule),
                           rule == FloorRule::cycle_power ? "cycle_power"
                                                          : "half_plus_two");
}

std::vector<int> thresholds_for(const ConditionId id, const LabeledGraph& host,
                                const Params& p) {
    switch (id) {
    case ConditionId::effective:
        return condition_thresholds(p, DegreeCondition::effective);
    case ConditionId::sequence:
        return condition_thresholds(p, DegreeCondition::sequence);
    case ConditionId::cycle_power:
        return floor_thresholds(host, p.k, FloorRule::cycle_power);
    case ConditionId::half_plus_two:
        return floor_thresholds(host, p.k, FloorRule::half_plus_two);
    }
    throw ParamsError("unknown condition id");
}

const char* condition_id_name(ConditionId id) {
    switch (id) {
    case ConditionId::effective: return "effective";
    case ConditionId::sequence: return "sequence";
    case ConditionId::cycle_power: return "cycle_power";
    case ConditionId::half_plus_two: return "half_plus_two";
    }
    return "unknown";
}

std::optional<ConditionId> condition_id_from_name(const std::string& name) {
    if (name == "effective") return ConditionId::effective;
    if (name == "sequence") return ConditionId::sequence;
    if (name == "cycle_power") return ConditionId::cycle_power;
    if (name == "half_plus_two") return ConditionId::half_plus_two;
    return std::nullopt;
}

} // namespace spansub
