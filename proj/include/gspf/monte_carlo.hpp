#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gspf/metrics.hpp"

namespace gspf {

enum class Execution { serial, parallel };

/// What one Monte Carlo run reports back.
struct RunTrace {
    std::vector<double> squared_error;   // per iteration
    std::vector<std::uint8_t> approx;    // per iteration, threshold runs only
    bool diverged = false;
    double seconds = 0.0;
};

using RunFunction = std::function<RunTrace(Index run, std::uint64_t seed)>;

/// Worker cap: GSP_FILTER_THREADS when set and positive, else the OpenMP default.
int worker_count();

/// Executes `runs` independent runs with seeds base_seed + r and averages
/// them with an ordered fold over the run index, so serial and parallel
/// execution give bit-identical results.
MetricSeries run_monte_carlo(Index runs, std::uint64_t base_seed, const RunFunction& run,
                             Execution execution = Execution::parallel);

}  // namespace gspf
