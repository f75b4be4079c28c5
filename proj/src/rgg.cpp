#include "spansub/rgg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spansub/builder.hpp"
#include "spansub/constructions.hpp"
#include "spansub/oracle.hpp"
#include "spansub/rng.hpp"

namespace spansub {

GeometricSample sample_rgg(int n, double r, std::uint64_t seed) {
    if (n < 1 || r < 0.0 || r > 1.0) {
        throw ParamsError("geometric sample needs n >= 1 and r in [0, 1]");
    }
    Rng rng(seed);
    std::vector<double> points(static_cast<std::size_t>(n));
    for (auto& x : points) x = rng.real01();
    std::sort(points.begin(), points.end());
    return GeometricSample{std::move(points), r, seed};
}

GeometricSample make_sample(std::vector<double> points, double r) {
    if (points.empty() || r < 0.0 || r > 1.0) {
        throw ParamsError("geometric sample needs points and r in [0, 1]");
    }
    for (double x : points) {
        if (x < 0.0 || x > 1.0) {
            throw ParamsError("sample points must lie in [0, 1]");
        }
    }
    std::sort(points.begin(), points.end());
    return GeometricSample{std::move(points), r, 0};
}

LabeledGraph geometric_graph(const GeometricSample& sample) {
    const int n = static_cast<int>(sample.points.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (sample.points[j - 1] - sample.points[i - 1] > sample.r) break;
            edges.emplace_back(i, j);
        }
    }
    return LabeledGraph(n, edges);
}

SandwichReport sandwich_check(const GeometricSample& sample, double eps) {
    if (eps <= 0.0 || eps >= 1.0) {
        throw ParamsError("sandwich check needs 0 < eps < 1");
    }
    const int n = static_cast<int>(sample.points.size());
    SandwichReport report;
    report.n = n;
    report.r = sample.r;
    report.eps = eps;
    const double nr = static_cast<double>(n) * sample.r;
    report.k_low = static_cast<int>(std::floor((1.0 - eps / 3.0) * nr));
    report.k_high = static_cast<int>(std::ceil((1.0 + eps / 3.0) * nr));
    LabeledGraph g = geometric_graph(sample);
    if (report.k_low < 1) {
        report.lower_ok = true;
    } else {
        // Containment of the whole power of the path reduces to its longest
        // jumps: i ~ i + k_low for every i.
        // A power beyond n - 1 adds no edges, so clamping loses nothing.
        int k = std::min(report.k_low, n - 1);
        report.lower_ok = true;
        for (int i = 1; i + k <= n; ++i) {
            if (sample.points[i - 1 + k] - sample.points[i - 1] > sample.r) {
                report.lower_ok = false;
                break;
            }
        }
    }
    if (report.k_high < 1) {
        report.upper_ok = g.edge_count() == 0;
    } else {
        report.upper_ok = bandwidth_witness_ok(g, report.k_high);
    }
    return report;
}

TrialOutcome resilience_trial(const GeometricSample& sample, double eps,
                              std::uint64_t adversary_seed) {
    const int n = static_cast<int>(sample.points.size());
    TrialOutcome outcome;
    outcome.seed = sample.seed;
    outcome.adversary_seed = adversary_seed;
    SandwichReport sw = sandwich_check(sample, eps);
    outcome.k_low = sw.k_low;
    outcome.k_high = sw.k_high;
    const double nr = static_cast<double>(n) * sample.r;
    outcome.threshold = static_cast<int>(std::ceil((1.0 + eps) * nr));
    outcome.sandwich_ok = sw.ok();
    if (!outcome.sandwich_ok) {
        outcome.status = TrialStatus::sandwich_failed;
        return outcome;
    }
    // With T below k_high + 2 the surviving graph need not even meet the
    // degree floors the guarantee is stated for, so the trial is inconclusive
    // by construction.
    outcome.threshold_ok = outcome.threshold >= sw.k_high + 2;
    if (!outcome.threshold_ok) {
        outcome.status = TrialStatus::threshold_gap;
        return outcome;
    }
    outcome.status = TrialStatus::ok;

    LabeledGraph g = geometric_graph(sample);
    std::vector<int> floors(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
        floors[v] = std::min(outcome.threshold, g.degree(v));
    }
    LabeledGraph damaged = delete_edges_greedy(g, floors, adversary_seed);

    Params p{n, sw.k_high, 2};
    // The sandwich upper bound is exactly the bandwidth witness, so the
    // condition check cannot throw here.
    ConditionReport cond = check_subdivision_condition(damaged, p,
                                                       DegreeCondition::sequence);
    outcome.condition_ok = cond.passed;
    try {
        PathSystem ps = grow_paths(damaged, p);
        RootedSubdivision s = assemble(damaged, p, ps);
        if (verify_subdivision(damaged, s, p.ell).ok) {
            std::vector<int> cycle = cycle_from_subdivision(s);
            outcome.hamiltonian = is_valid_hamilton_cycle(damaged, cycle);
        }
    } catch (const Error&) {
        outcome.hamiltonian = false;
    }
    return outcome;
}

} // namespace spansub
