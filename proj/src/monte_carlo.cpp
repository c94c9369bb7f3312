#include "gspf/monte_carlo.hpp"

#include <omp.h>

#include <cstdlib>
#include <exception>
#include <string>

#include "gspf/error.hpp"

namespace gspf {

int worker_count() {
    int workers = omp_get_max_threads();
    if (const char* env = std::getenv("GSP_FILTER_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0 && cap < workers) workers = cap;
    }
    return workers;
}

namespace {

MetricSeries fold(const std::vector<RunTrace>& traces) {
    MetricSeries out;
    out.runs = static_cast<Index>(traces.size());
    const std::size_t iterations = traces.front().squared_error.size();
    const bool branches = !traces.front().approx.empty();
    out.msd.assign(iterations, 0.0);
    if (branches) out.approx_fraction.assign(iterations, 0.0);
    double seconds = 0.0;
    for (const auto& t : traces) {
        if (t.squared_error.size() != iterations) {
            throw Error(ErrorCode::dimension_mismatch, "runs reported different iteration counts");
        }
        for (std::size_t k = 0; k < iterations; ++k) out.msd[k] += t.squared_error[k];
        if (branches) {
            for (std::size_t k = 0; k < iterations; ++k) out.approx_fraction[k] += t.approx[k];
        }
        if (t.diverged) ++out.diverged_runs;
        seconds += t.seconds;
    }
    const double inv = 1.0 / static_cast<double>(traces.size());
    for (auto& v : out.msd) v *= inv;
    for (auto& v : out.approx_fraction) v *= inv;
    out.seconds_per_iteration = iterations == 0 ? 0.0 : seconds * inv / static_cast<double>(iterations);
    return out;
}

}  // namespace

MetricSeries run_monte_carlo(Index runs, std::uint64_t base_seed, const RunFunction& run,
                             Execution execution) {
    if (runs < 1) throw Error(ErrorCode::invalid_parameter, "runs must be at least 1");
    std::vector<RunTrace> traces(static_cast<std::size_t>(runs));
    if (execution == Execution::serial) {
        for (Index r = 0; r < runs; ++r) {
            traces[static_cast<std::size_t>(r)] = run(r, base_seed + static_cast<std::uint64_t>(r));
        }
        return fold(traces);
    }
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
    for (Index r = 0; r < runs; ++r) {
        try {
            traces[static_cast<std::size_t>(r)] = run(r, base_seed + static_cast<std::uint64_t>(r));
        } catch (...) {
#pragma omp critical(gspf_mc_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return fold(traces);
}

}  // namespace gspf
