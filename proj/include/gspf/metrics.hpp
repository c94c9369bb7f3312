#pragma once

#include <vector>

#include "gspf/types.hpp"

namespace gspf {

enum class MetricMode { steady, time_varying };

/// Per-iteration error traces averaged over Monte Carlo runs.
struct MetricSeries {
    std::vector<double> msd;              // MSD[k], k = 1..K
    std::vector<double> nmsd;             // NMSD_t[k], time-varying runs only
    std::vector<double> approx_fraction;  // share of runs on the approximated branch, threshold runs only
    double seconds_per_iteration = 0.0;
    Index runs = 0;
    Index diverged_runs = 0;

    Index iterations() const noexcept { return static_cast<Index>(msd.size()); }
};

/// Value used for squared errors of diverged runs.
inline constexpr double kDivergedClip = 1e12;

double to_db(double value);

/// MSD of a single trajectory against its truth. `truth` has one frame
/// (static signal) or one frame per trajectory entry.
MetricSeries compute_metrics(const std::vector<Vector>& trajectory, const std::vector<Vector>& truth,
                             MetricMode mode);

/// NMSD_t[k] = (1/k) sum_{n<=k} MSD[n] / ||x_0[n]||^2. Throws degenerate-frame
/// on a zero-energy truth frame.
std::vector<double> running_nmsd(const std::vector<double>& msd, const std::vector<double>& truth_energy);

/// Mean of the last `tail` entries.
double tail_mean(const std::vector<double>& values, Index tail);

}  // namespace gspf
