#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gspf/config.hpp"
#include "gspf/filters.hpp"
#include "gspf/metrics.hpp"
#include "gspf/monte_carlo.hpp"
#include "gspf/selection.hpp"

namespace gspf {

/// Everything fixed across Monte Carlo runs.
struct ExperimentSetup {
    Graph graph;
    LaplacianEigensystem es;
    BandlimitOperator blo;
    SamplingOperator ds;
    SelectionReport selection;
    std::shared_ptr<const FilterOperators> ops;
    /// Truth frames, each n x d. One frame for static signals, one per step
    /// for time-varying data.
    std::vector<Matrix> truth;

    Index features() const noexcept { return truth.front().cols(); }
};

ExperimentSetup build_setup(const ExperimentConfig& config);

struct SimulationSpec {
    FilterConfig filter;
    AlphaStableModel model{1.5, 0.1};
    bool noiseless = false;
    Index iterations = 1000;
    Index runs = 100;
    std::uint64_t base_seed = 1;
    Execution execution = Execution::parallel;
    /// Shared B_n; built from `model` when absent and the algorithm needs it.
    std::shared_ptr<const ConvergenceMatrices> cm;
};

/// Monte Carlo simulation of one filter on a prepared setup. Run r draws its
/// noise from seed base_seed + r, fresh for every node and iteration, and
/// observes Y[k] = D_S(X_0[k] + W[k]). MSD[k] compares the estimate after the
/// k-th observation with X_0[k]. A run whose squared error becomes non-finite
/// or exceeds kDivergedClip, or whose update throws, is flagged diverged and
/// clipped from then on.
MetricSeries simulate(const ExperimentSetup& setup, const SimulationSpec& spec);

struct TheoryReport {
    std::optional<double> mu_max;
    std::optional<double> theoretical_msd;
    std::string note;
};

/// mu_max and the steady-state prediction where the analysis applies
/// (gnlmp-approx and gnlmp-threshold under noise).
TheoryReport theory_report(const ExperimentSetup& setup, const ExperimentConfig& config);

struct ExperimentResult {
    MetricSeries metrics;
    TheoryReport theory;
    double steady_msd = 0.0;
    std::string status;
};

SimulationSpec simulation_spec(const ExperimentConfig& config, Execution execution = Execution::parallel);

/// Builds the setup, simulates, and writes msd.csv and summary.txt into the
/// output directory. Throws stability-violation after writing when more than
/// half of the runs of an lp-norm algorithm diverged.
ExperimentResult run_experiment(const ExperimentConfig& config, Execution execution = Execution::parallel);

}  // namespace gspf
