// Error types shared across the library. Every failure that a CLI stage
// must distinguish gets its own type so exit codes can partition causes.
#pragma once

#include <stdexcept>
#include <string>

namespace spansub {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input file could not be parsed (message carries source:line).
struct ParseError : Error {
    using Error::Error;
};

// Parameter triple (n, k, l) violates k >= l >= 1 or n >= l + 2, or a
// generator/operation received out-of-range arguments.
struct ParamsError : Error {
    using Error::Error;
};

// A graph claimed to be a spanning subgraph of a host has an edge the host
// lacks (or a different vertex count).
struct NotSubgraphError : Error {
    using Error::Error;
};

// An edge stretches further than the claimed bandwidth witness allows.
struct BandwidthViolatedError : Error {
    BandwidthViolatedError(const std::string& msg, int u, int v, int k)
        : Error(msg), u(u), v(v), k(k) {}
    int u, v, k;
};

// Vertex 1 has fewer than l neighbours, so the l path starts cannot be chosen.
struct RootDegreeTooSmallError : Error {
    RootDegreeTooSmallError(const std::string& msg, int degree, int ell)
        : Error(msg), degree(degree), ell(ell) {}
    int degree, ell;
};

// Path assembly failed; `kind` says how and `vertex` names the witness.
struct AssemblyError : Error {
    enum class Kind { endpoint_not_adjacent_to_last_vertex, coverage_gap };
    AssemblyError(const std::string& msg, Kind kind, int vertex)
        : Error(msg), kind(kind), vertex(vertex) {}
    Kind kind;
    int vertex;
};

// Instance exceeds an exhaustive-search cap.
struct TooLargeError : Error {
    using Error::Error;
};

// Vertex Menger separation needs non-adjacent roots.
struct RootsAdjacentError : Error {
    using Error::Error;
};

// The host handed to the condition-respecting sampler fails the condition
// itself, so no qualifying subgraph exists.
struct HostFailsConditionError : Error {
    using Error::Error;
};

} // namespace spansub
