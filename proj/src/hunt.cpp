#include "spansub/hunt.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <tuple>

#include "spansub/constructions.hpp"
#include "spansub/parallel.hpp"

namespace spansub {

HuntReport run_hunt(const HuntConfig& config) {
    if (config.n_min < 3 || config.n_min > config.n_max ||
        config.k_min < 1 || config.k_min > config.k_max ||
        config.trials < 1) {
        throw ParamsError("hunt grid is empty or malformed");
    }
    if (config.n_max > config.oracle_cap) {
        throw TooLargeError("hunt cells reach n=" +
                            std::to_string(config.n_max) +
                            " but the exhaustive check is capped at " +
                            std::to_string(config.oracle_cap));
    }

    HuntReport report;
    std::mutex hits_mutex;
    int cell_index = -1;
    for (int n = config.n_min; n <= config.n_max; ++n) {
        for (int k = config.k_min; k <= config.k_max; ++k) {
            ++cell_index;
            CellResult cell;
            cell.n = n;
            cell.k = k;
            if (config.rule == FloorRule::cycle_power && 2 * k > n) {
                cell.status = CellStatus::invalid_params;
                report.cells.push_back(cell);
                continue;
            }
            LabeledGraph host = config.rule == FloorRule::cycle_power
                                    ? power_cycle(n, k)
                                    : power_path(n, k);
            auto floors = floor_thresholds(host, k, config.rule);
            bool host_ok = true;
            for (int v = 1; v <= n; ++v) {
                if (host.degree(v) < floors[v]) {
                    host_ok = false;
                    break;
                }
            }
            if (!host_ok) {
                cell.status = CellStatus::vacuous;
                report.cells.push_back(cell);
                continue;
            }
            cell.status = CellStatus::ran;
            cell.trials_run = config.trials;
            std::vector<char> failed(static_cast<std::size_t>(config.trials),
                                     0);
            std::uint64_t cell_base =
                config.seed_base + static_cast<std::uint64_t>(cell_index) *
                                       static_cast<std::uint64_t>(config.trials);
            parallel_for(
                static_cast<std::size_t>(config.trials), config.jobs,
                [&](std::size_t t) {
                    std::uint64_t seed = cell_base + t;
                    LabeledGraph sample =
                        delete_edges_greedy(host, floors, seed);
                    if (!has_hamilton_cycle(sample, config.oracle_cap)) {
                        failed[t] = 1;
                        std::lock_guard<std::mutex> lock(hits_mutex);
                        report.hits.push_back(
                            Counterexample{n, k, seed, sample});
                    }
                });
            for (char f : failed) cell.counterexamples += f;
            report.total_trials += cell.trials_run;
            report.cells.push_back(cell);
        }
    }
    // Worker scheduling must not leak into the report.
    std::sort(report.hits.begin(), report.hits.end(),
              [](const Counterexample& a, const Counterexample& b) {
                  return std::tie(a.n, a.k, a.seed) <
                         std::tie(b.n, b.k, b.seed);
              });
    return report;
}

} // namespace spansub
