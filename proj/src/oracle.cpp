#include "spansub/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <string>

namespace spansub {

const char* invariant_name(SubdivisionInvariant inv) {
    switch (inv) {
    case SubdivisionInvariant::none: return "none";
    case SubdivisionInvariant::branch_count: return "branch_count";
    case SubdivisionInvariant::roots_invalid: return "roots_invalid";
    case SubdivisionInvariant::branch_endpoints: return "branch_endpoints";
    case SubdivisionInvariant::branch_too_short: return "branch_too_short";
    case SubdivisionInvariant::vertex_out_of_range:
        return "vertex_out_of_range";
    case SubdivisionInvariant::duplicate_vertex_in_branch:
        return "duplicate_vertex_in_branch";
    case SubdivisionInvariant::missing_edge: return "missing_edge";
    case SubdivisionInvariant::internal_overlap: return "internal_overlap";
    case SubdivisionInvariant::not_spanning: return "not_spanning";
    }
    return "unknown";
}

VerifyResult verify_subdivision(const LabeledGraph& g,
                                const RootedSubdivision& s, int ell) {
    auto fail = [](SubdivisionInvariant inv, std::string detail) {
        return VerifyResult{false, inv, std::move(detail)};
    };
    const int n = g.n();
    if (static_cast<int>(s.branches.size()) != ell) {
        return fail(SubdivisionInvariant::branch_count,
                    "expected " + std::to_string(ell) + " branches, got " +
                        std::to_string(s.branches.size()));
    }
    if (s.root_u < 1 || s.root_u > n || s.root_w < 1 || s.root_w > n ||
        s.root_u == s.root_w) {
        return fail(SubdivisionInvariant::roots_invalid,
                    "roots (" + std::to_string(s.root_u) + ", " +
                        std::to_string(s.root_w) + ") are not two distinct " +
                        "vertices of the graph");
    }
    for (std::size_t b = 0; b < s.branches.size(); ++b) {
        const auto& br = s.branches[b];
        std::string tag = "branch " + std::to_string(b);
        if (br.empty() || br.front() != s.root_u || br.back() != s.root_w) {
            return fail(SubdivisionInvariant::branch_endpoints,
                        tag + " does not run from root to root");
        }
        if (br.size() < 3) {
            return fail(SubdivisionInvariant::branch_too_short,
                        tag + " has no internal vertex");
        }
        for (int v : br) {
            if (v < 1 || v > n) {
                return fail(SubdivisionInvariant::vertex_out_of_range,
                            tag + " contains vertex " + std::to_string(v));
            }
        }
        std::vector<int> sorted = br;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            return fail(SubdivisionInvariant::duplicate_vertex_in_branch,
                        tag + " repeats a vertex");
        }
        for (std::size_t i = 0; i + 1 < br.size(); ++i) {
            if (!g.has_edge(br[i], br[i + 1])) {
                return fail(SubdivisionInvariant::missing_edge,
                            tag + " uses the missing edge (" +
                                std::to_string(br[i]) + ", " +
                                std::to_string(br[i + 1]) + ")");
            }
        }
    }
    std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
    owner[s.root_u] = owner[s.root_w] = static_cast<int>(s.branches.size());
    for (std::size_t b = 0; b < s.branches.size(); ++b) {
        const auto& br = s.branches[b];
        for (std::size_t i = 1; i + 1 < br.size(); ++i) {
            if (owner[br[i]] != -1) {
                return fail(SubdivisionInvariant::internal_overlap,
                            "vertex " + std::to_string(br[i]) +
                                " is internal to branch " + std::to_string(b) +
                                " but already used");
            }
            owner[br[i]] = static_cast<int>(b);
        }
    }
    for (int v = 1; v <= n; ++v) {
        if (owner[v] == -1) {
            return fail(SubdivisionInvariant::not_spanning,
                        "vertex " + std::to_string(v) + " is uncovered");
        }
    }
    return VerifyResult{true, SubdivisionInvariant::none, ""};
}

bool is_valid_hamilton_cycle(const LabeledGraph& g,
                             const std::vector<int>& seq) {
    const int n = g.n();
    if (n < 3 || static_cast<int>(seq.size()) != n) return false;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : seq) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < n; ++i) {
        if (!g.has_edge(seq[i], seq[(i + 1) % n])) return false;
    }
    return true;
}

bool is_valid_hamilton_path(const LabeledGraph& g, const std::vector<int>& seq,
                            int u, int w) {
    const int n = g.n();
    if (static_cast<int>(seq.size()) != n || seq.empty()) return false;
    if (seq.front() != u || seq.back() != w) return false;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : seq) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i + 1 < n; ++i) {
        if (!g.has_edge(seq[i], seq[i + 1])) return false;
    }
    return true;
}

namespace {

// Subset dynamic programme anchored at `anchor` (0-based): reach[mask][last]
// says a simple path covers exactly `mask` starting at anchor, ending at
// last. Vertices are 0-based bits here; labels shift by one at the border.
std::vector<std::vector<int>> adjacency_bits(const LabeledGraph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n()));
    for (int v = 1; v <= g.n(); ++v) {
        for (int u : g.neighbors(v)) adj[v - 1].push_back(u - 1);
    }
    return adj;
}

std::vector<int> walk_back(const std::vector<char>& reach,
                           const std::vector<std::vector<int>>& adj, int n,
                           int anchor, std::uint32_t mask, int last) {
    std::vector<int> rev;
    while (true) {
        rev.push_back(last + 1);
        if (last == anchor && mask == (1u << anchor)) break;
        std::uint32_t prev_mask = mask & ~(1u << last);
        int prev = -1;
        for (int q : adj[last]) {
            if ((prev_mask >> q & 1u) &&
                reach[prev_mask * static_cast<std::uint32_t>(n) +
                      static_cast<std::uint32_t>(q)]) {
                prev = q;
                break;
            }
        }
        mask = prev_mask;
        last = prev;
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

std::vector<char> run_subset_dp(const LabeledGraph& g, int anchor) {
    const int n = g.n();
    auto adj = adjacency_bits(g);
    const std::uint32_t full = n == 32 ? 0xffffffffu : (1u << n) - 1;
    std::vector<char> reach(static_cast<std::size_t>(full + 1) *
                                static_cast<std::size_t>(n),
                            0);
    auto at = [n](std::uint32_t mask, int v) {
        return static_cast<std::size_t>(mask) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(v);
    };
    reach[at(1u << anchor, anchor)] = 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (!(mask >> anchor & 1u)) continue;
        for (int last = 0; last < n; ++last) {
            if (!(mask >> last & 1u) || !reach[at(mask, last)]) continue;
            for (int q : adj[last]) {
                if (!(mask >> q & 1u)) {
                    reach[at(mask | (1u << q), q)] = 1;
                }
            }
        }
    }
    return reach;
}

} // namespace

std::optional<std::vector<int>> has_hamilton_cycle(const LabeledGraph& g,
                                                   int cap) {
    const int n = g.n();
    if (n > cap) {
        throw TooLargeError("hamilton search capped at n=" +
                            std::to_string(cap) + ", got n=" +
                            std::to_string(n));
    }
    if (n < 3) return std::nullopt;
    auto adj = adjacency_bits(g);
    auto reach = run_subset_dp(g, 0);
    const std::uint32_t full = (1u << n) - 1;
    auto at = [n](std::uint32_t mask, int v) {
        return static_cast<std::size_t>(mask) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(v);
    };
    for (int last = 1; last < n; ++last) {
        if (reach[at(full, last)] && g.has_edge(last + 1, 1)) {
            return walk_back(reach, adj, n, 0, full, last);
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> has_hamilton_path(const LabeledGraph& g, int u,
                                                  int w, int cap) {
    const int n = g.n();
    if (n > cap) {
        throw TooLargeError("hamilton search capped at n=" +
                            std::to_string(cap) + ", got n=" +
                            std::to_string(n));
    }
    if (u == w || u < 1 || u > n || w < 1 || w > n) {
        throw ParamsError("hamilton path needs two distinct vertices");
    }
    auto adj = adjacency_bits(g);
    auto reach = run_subset_dp(g, u - 1);
    const std::uint32_t full = (1u << n) - 1;
    if (reach[static_cast<std::size_t>(full) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(w - 1)]) {
        return walk_back(reach, adj, n, u - 1, full, w - 1);
    }
    return std::nullopt;
}

namespace {

// Branch-growing backtracking state for the rooted subdivision search.
struct SubdivisionSearch {
    const LabeledGraph& g;
    int u, w, ell;
    std::uint32_t covered; // includes both roots; bit v-1 per vertex
    std::vector<std::vector<int>> branches;
    std::vector<int> current; // partial branch, starts with u

    SubdivisionSearch(const LabeledGraph& g, int u, int w, int ell)
        : g(g), u(u), w(w), ell(ell),
          covered((1u << (u - 1)) | (1u << (w - 1))) {}

    static int bit(int v) { return v - 1; }

    // Every uncovered vertex must still be reachable from w through
    // uncovered vertices (it must eventually connect onward to w), and from
    // the current growth frontier: the live endpoint, plus u whenever more
    // branches remain to be started.
    bool feasible(int frontier_vertex, bool branches_remain) const {
        const int n = g.n();
        std::uint32_t uncov = ~covered & ((n == 32 ? 0xffffffffu
                                                   : (1u << n) - 1));
        if (uncov == 0) return true;
        auto sweep = [&](std::uint32_t seeds) {
            std::uint32_t seen = seeds;
            std::uint32_t frontier = seeds;
            while (frontier != 0) {
                std::uint32_t next = 0;
                for (int v = 1; v <= n; ++v) {
                    if (!(frontier >> bit(v) & 1u)) continue;
                    for (int q : g.neighbors(v)) {
                        std::uint32_t qb = 1u << bit(q);
                        if ((uncov & qb) && !(seen & qb)) {
                            seen |= qb;
                            next |= qb;
                        }
                    }
                }
                frontier = next;
            }
            return seen;
        };
        std::uint32_t from_w = sweep(1u << bit(w));
        if ((uncov & ~from_w) != 0) return false;
        std::uint32_t seeds = 0;
        if (frontier_vertex != 0) seeds |= 1u << bit(frontier_vertex);
        if (branches_remain) seeds |= 1u << bit(u);
        std::uint32_t from_frontier = sweep(seeds);
        return (uncov & ~from_frontier) == 0;
    }

    bool start_branch(int min_first_internal) {
        if (static_cast<int>(branches.size()) == ell) {
            const int n = g.n();
            std::uint32_t full = n == 32 ? 0xffffffffu : (1u << n) - 1;
            return covered == full;
        }
        bool remain_after = static_cast<int>(branches.size()) + 1 < ell;
        for (int x : g.neighbors(u)) {
            if (x < min_first_internal || x == w) continue;
            if (covered >> bit(x) & 1u) continue;
            covered |= 1u << bit(x);
            current = {u, x};
            if (feasible(x, remain_after) && extend(x, remain_after)) {
                return true;
            }
            covered &= ~(1u << bit(x));
        }
        current.clear();
        return false;
    }

    bool extend(int v, bool branches_remain) {
        for (int q : g.neighbors(v)) {
            if (q == w) {
                std::vector<int> done = current;
                done.push_back(w);
                branches.push_back(std::move(done));
                int next_min = current[1] + 1;
                std::vector<int> saved = std::move(current);
                if (start_branch(next_min)) return true;
                current = std::move(saved);
                branches.pop_back();
            } else if (!(covered >> bit(q) & 1u)) {
                covered |= 1u << bit(q);
                current.push_back(q);
                if (feasible(q, branches_remain) &&
                    extend(q, branches_remain)) {
                    return true;
                }
                current.pop_back();
                covered &= ~(1u << bit(q));
            }
        }
        return false;
    }
};

} // namespace

std::optional<RootedSubdivision> has_rooted_spanning_subdivision(
    const LabeledGraph& g, int u, int w, int ell, int cap) {
    const int n = g.n();
    if (n > cap) {
        throw TooLargeError("subdivision search capped at n=" +
                            std::to_string(cap) + ", got n=" +
                            std::to_string(n));
    }
    if (u == w || u < 1 || u > n || w < 1 || w > n || ell < 1) {
        throw ParamsError("subdivision search needs distinct roots and l >= 1");
    }
    // Each branch consumes at least one internal vertex and spanning forces
    // every non-root vertex onto some branch.
    if (n - 2 < ell) return std::nullopt;
    SubdivisionSearch search(g, u, w, ell);
    if (!search.start_branch(1)) return std::nullopt;
    RootedSubdivision s;
    s.root_u = u;
    s.root_w = w;
    s.branches = std::move(search.branches);
    return s;
}

const char* certificate_kind_name(CertificateKind kind) {
    switch (kind) {
    case CertificateKind::subdivision_found: return "subdivision_found";
    case CertificateKind::hamilton_found: return "hamilton_found";
    case CertificateKind::separator: return "separator";
    case CertificateKind::exhausted: return "exhausted";
    }
    return "unknown";
}

namespace {

// Vertex-capacity max flow: each non-root vertex splits into in/out nodes
// joined by a unit arc; edges get effectively infinite capacity. The max
// flow equals the minimum number of vertices separating the roots.
struct FlowNetwork {
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> arcs;

    explicit FlowNetwork(int nodes) : arcs(static_cast<std::size_t>(nodes)) {}

    void add(int from, int to, int cap) {
        arcs[from].push_back({to, cap, static_cast<int>(arcs[to].size())});
        arcs[to].push_back({from, 0, static_cast<int>(arcs[from].size()) - 1});
    }

    int augment(int source, int sink) {
        std::vector<std::pair<int, int>> parent(arcs.size(), {-1, -1});
        std::queue<int> queue;
        queue.push(source);
        parent[source] = {source, -1};
        while (!queue.empty() && parent[sink].first == -1) {
            int v = queue.front();
            queue.pop();
            for (std::size_t i = 0; i < arcs[v].size(); ++i) {
                const Arc& a = arcs[v][i];
                if (a.cap > 0 && parent[a.to].first == -1) {
                    parent[a.to] = {v, static_cast<int>(i)};
                    queue.push(a.to);
                }
            }
        }
        if (parent[sink].first == -1) return 0;
        int v = sink;
        while (v != source) {
            auto [pv, pi] = parent[v];
            Arc& a = arcs[pv][pi];
            a.cap -= 1;
            arcs[a.to][a.rev].cap += 1;
            v = pv;
        }
        return 1;
    }

    std::vector<char> residual_reach(int source) {
        std::vector<char> seen(arcs.size(), 0);
        std::queue<int> queue;
        queue.push(source);
        seen[source] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (const Arc& a : arcs[v]) {
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    queue.push(a.to);
                }
            }
        }
        return seen;
    }
};

} // namespace

Certificate min_root_separator(const LabeledGraph& g, int u, int w) {
    const int n = g.n();
    if (u == w || u < 1 || u > n || w < 1 || w > n) {
        throw ParamsError("separator needs two distinct vertices");
    }
    if (g.has_edge(u, w)) {
        throw RootsAdjacentError("no vertex set separates the adjacent roots " +
                                 std::to_string(u) + " and " +
                                 std::to_string(w));
    }
    // Node 2v is "into v", 2v+1 is "out of v" (0-based vertices). The roots
    // keep infinite internal capacity; flow starts at out(u), ends at in(w).
    auto in_node = [](int v) { return 2 * (v - 1); };
    auto out_node = [](int v) { return 2 * (v - 1) + 1; };
    FlowNetwork net(2 * n);
    const int inf = n + 1;
    for (int v = 1; v <= n; ++v) {
        net.add(in_node(v), out_node(v), v == u || v == w ? inf : 1);
    }
    for (auto [a, b] : g.edges()) {
        net.add(out_node(a), in_node(b), inf);
        net.add(out_node(b), in_node(a), inf);
    }
    while (net.augment(out_node(u), in_node(w)) > 0) {
    }
    auto seen = net.residual_reach(out_node(u));
    Certificate cert;
    cert.kind = CertificateKind::separator;
    for (int v = 1; v <= n; ++v) {
        if (v == u || v == w) continue;
        if (seen[in_node(v)] && !seen[out_node(v)]) cert.cut.push_back(v);
    }
    return cert;
}

bool separates(const LabeledGraph& g, const std::vector<int>& cut, int u,
               int w) {
    const int n = g.n();
    std::vector<char> blocked(static_cast<std::size_t>(n) + 1, 0);
    for (int v : cut) blocked[v] = 1;
    if (blocked[u] || blocked[w]) {
        throw ParamsError("cut may not contain a root");
    }
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::queue<int> queue;
    queue.push(u);
    seen[u] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int q : g.neighbors(v)) {
            if (!seen[q] && !blocked[q]) {
                seen[q] = 1;
                queue.push(q);
            }
        }
    }
    return !seen[w];
}

Certificate decide_rooted_subdivision(const LabeledGraph& g, int u, int w,
                                      int ell, int cap) {
    if (!g.has_edge(u, w)) {
        Certificate cut_cert = min_root_separator(g, u, w);
        if (static_cast<int>(cut_cert.cut.size()) < ell) {
            // Fewer than ell internally disjoint u-w paths exist, so ell
            // branches cannot: the separator alone certifies absence.
            return cut_cert;
        }
    }
    auto found = has_rooted_spanning_subdivision(g, u, w, ell, cap);
    Certificate cert;
    if (found) {
        cert.kind = CertificateKind::subdivision_found;
        cert.subdivision = std::move(found);
    } else {
        cert.kind = CertificateKind::exhausted;
    }
    return cert;
}

} // namespace spansub
