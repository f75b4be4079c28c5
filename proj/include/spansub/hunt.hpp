// Seeded counterexample hunt for the conjectured degree floors: sample
// floor-respecting subgraphs of the host family cell by cell and ask the
// exhaustive oracle whether any fails to be Hamiltonian.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spansub/graph.hpp"
#include "spansub/oracle.hpp"

namespace spansub {

struct HuntConfig {
    FloorRule rule = FloorRule::cycle_power;
    int n_min = 5;
    int n_max = 10;
    int k_min = 2;
    int k_max = 3;
    int trials = 200;
    std::uint64_t seed_base = 0;
    int oracle_cap = kDefaultHamiltonCap;
    int jobs = 1;
};

enum class CellStatus {
    ran,           // trials executed
    vacuous,       // host fails its own floor; no qualifying subgraph exists
    invalid_params // the (n, k) pair does not define a host
};

struct CellResult {
    int n = 0;
    int k = 0;
    CellStatus status = CellStatus::ran;
    int trials_run = 0;
    int counterexamples = 0;
};

struct Counterexample {
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    LabeledGraph graph;
};

struct HuntReport {
    std::vector<CellResult> cells;
    std::vector<Counterexample> hits;
    int total_trials = 0;
};

// Runs the hunt over the whole (n, k) grid. Each trial samples a subgraph
// of the cell's host (the k-th power of a cycle or path) that respects the
// floor, then checks Hamiltonicity exhaustively; a non-Hamiltonian sample is
// a counterexample and is returned with its seed. Trial seeds are
// seed_base + cell_index * trials + trial, so any hit can be replayed in
// isolation. Throws TooLargeError when n_max exceeds oracle_cap, because the
// exhaustive check could not certify those cells.
HuntReport run_hunt(const HuntConfig& config);

} // namespace spansub
