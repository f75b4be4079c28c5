// Exhaustive reference oracles and the independent subdivision verifier.
// Everything here is written for correctness on small instances and never
// shares code with the constructive builder, so agreement between the two
// is meaningful evidence.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spansub/builder.hpp"
#include "spansub/graph.hpp"

namespace spansub {

inline constexpr int kDefaultHamiltonCap = 20;
inline constexpr int kDefaultSubdivisionCap = 14;

// Invariants checked by verify_subdivision, in check order; the first
// failure is reported.
enum class SubdivisionInvariant {
    none,
    branch_count,
    roots_invalid,
    branch_endpoints,
    branch_too_short,
    vertex_out_of_range,
    duplicate_vertex_in_branch,
    missing_edge,
    internal_overlap,
    not_spanning,
};

const char* invariant_name(SubdivisionInvariant inv);

struct VerifyResult {
    bool ok = false;
    SubdivisionInvariant violated = SubdivisionInvariant::none;
    std::string detail;
};

// Checks that s is a spanning subdivision of K_{2,l} in g rooted at
// (s.root_u, s.root_w): l branches, each a path from root_u to root_w along
// edges of g with at least one internal vertex, branches internally
// disjoint, and every vertex of g on some branch.
VerifyResult verify_subdivision(const LabeledGraph& g,
                                const RootedSubdivision& s, int ell);

// True iff seq lists every vertex exactly once and consecutive vertices
// (cyclically) are adjacent. Needs n >= 3.
bool is_valid_hamilton_cycle(const LabeledGraph& g,
                             const std::vector<int>& seq);

// True iff seq is a Hamilton path from u to w.
bool is_valid_hamilton_path(const LabeledGraph& g, const std::vector<int>& seq,
                            int u, int w);

// Exhaustive Hamilton cycle search by dynamic programming over vertex
// subsets. Returns a cycle starting at vertex 1, or nullopt if none exists.
// Throws TooLargeError when n exceeds cap.
std::optional<std::vector<int>> has_hamilton_cycle(
    const LabeledGraph& g, int cap = kDefaultHamiltonCap);

// Exhaustive Hamilton u-w path search, same machinery.
std::optional<std::vector<int>> has_hamilton_path(
    const LabeledGraph& g, int u, int w, int cap = kDefaultHamiltonCap);

// Exhaustive search for a spanning subdivision of K_{2,l} rooted at (u, w).
// Branches are grown one at a time with their first internal vertices in
// ascending order (each branch multiset has exactly one such ordering) and
// reachability pruning keeps the search tractable up to the cap. The
// returned witness is the lexicographically first in that canonical order.
// Throws TooLargeError when n exceeds cap.
std::optional<RootedSubdivision> has_rooted_spanning_subdivision(
    const LabeledGraph& g, int u, int w, int ell,
    int cap = kDefaultSubdivisionCap);

enum class CertificateKind {
    subdivision_found,
    hamilton_found,
    separator,
    exhausted,
};

const char* certificate_kind_name(CertificateKind kind);

// Outcome of an oracle decision with its evidence: a witness object for the
// positive kinds, a vertex cut for `separator`, nothing for `exhausted`.
struct Certificate {
    CertificateKind kind;
    std::optional<RootedSubdivision> subdivision;
    std::vector<int> cycle;
    std::vector<int> cut;
};

// Minimum set of vertices (excluding the roots) whose removal separates u
// from w, computed by maximum flow on the vertex-split network. Requires
// the roots to be distinct and non-adjacent (RootsAdjacentError), since no
// vertex set separates adjacent roots. An already disconnected pair yields
// the empty cut.
Certificate min_root_separator(const LabeledGraph& g, int u, int w);

// True iff deleting cut leaves u and w in different components.
bool separates(const LabeledGraph& g, const std::vector<int>& cut, int u,
               int w);

// Decision procedure with evidence: when the roots are non-adjacent and the
// minimum separator has fewer than ell vertices, that separator certifies
// absence outright; otherwise the exhaustive search either finds a witness
// or certifies absence by exhaustion.
Certificate decide_rooted_subdivision(const LabeledGraph& g, int u, int w,
                                      int ell,
                                      int cap = kDefaultSubdivisionCap);

} // namespace spansub
