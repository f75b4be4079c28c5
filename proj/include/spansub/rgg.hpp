// One-dimensional random geometric graphs and the power-of-path sandwich
// experiment: sorted uniform points on [0, 1] joined within distance r,
// compared against powers of the path on the same labels, plus a seeded
// adversarial deletion trial for the Hamiltonicity machinery.
#pragma once

#include <cstdint>
#include <vector>

#include "spansub/graph.hpp"

namespace spansub {

struct GeometricSample {
    std::vector<double> points; // ascending; vertex i sits at points[i-1]
    double r;
    std::uint64_t seed; // 0 for hand-built samples
};

// n points uniform on [0, 1], sorted ascending. Requires n >= 1 and
// 0 <= r <= 1.
GeometricSample sample_rgg(int n, double r, std::uint64_t seed);

// Wraps externally chosen points (sorted here) as a sample.
GeometricSample make_sample(std::vector<double> points, double r);

// Graph on 1..n with i ~ j iff |points[i-1] - points[j-1]| <= r. Sorted
// points make this an interval graph: i ~ j with i < m < j forces i ~ m
// and m ~ j.
LabeledGraph geometric_graph(const GeometricSample& sample);

struct SandwichReport {
    int n = 0;
    double r = 0.0;
    double eps = 0.0;
    int k_low = 0;  // floor((1 - eps/3) * n * r)
    int k_high = 0; // ceil((1 + eps/3) * n * r)
    bool lower_ok = false; // power_path(n, k_low) is a subgraph of the sample
    bool upper_ok = false; // the sample is a subgraph of power_path(n, k_high)
    bool ok() const { return lower_ok && upper_ok; }
};

// Tests both sandwich inclusions exactly against generated powers of the
// path. Requires 0 < eps < 1.
SandwichReport sandwich_check(const GeometricSample& sample, double eps);

enum class TrialStatus {
    ok,              // all gates cleared, outcome recorded
    sandwich_failed, // the sample is not sandwiched; nothing else ran
    threshold_gap,   // degree threshold too close to k_high to be meaningful
};

struct TrialOutcome {
    std::uint64_t seed = 0;
    std::uint64_t adversary_seed = 0;
    TrialStatus status = TrialStatus::sandwich_failed;
    int k_low = 0;
    int k_high = 0;
    int threshold = 0;       // ceil((1 + eps) * n * r)
    bool sandwich_ok = false;
    bool threshold_ok = false;
    bool condition_ok = false; // sequence condition held at (n, k_high, 2)
    bool hamiltonian = false;  // greedy build produced a verified cycle
};

// One adversarial resilience trial. Gates: the sandwich must hold
// (status sandwich_failed otherwise) and the degree threshold
// T = ceil((1 + eps) * n * r) must reach k_high + 2 (threshold_gap
// otherwise). Then a seeded greedy adversary deletes edges while keeping
// every degree at min{T, deg(v)}, the sequence condition at (n, k_high, 2)
// is recorded, and the greedy pipeline runs on the damaged graph; a cycle
// counts only if the independent validity check accepts it. The condition
// check regularly fails at the right boundary of the labelling even though
// the build succeeds, which is why condition_ok and hamiltonian are
// recorded separately.
TrialOutcome resilience_trial(const GeometricSample& sample, double eps,
                              std::uint64_t adversary_seed);

} // namespace spansub
