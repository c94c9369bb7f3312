#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gspf/analysis.hpp"
#include "gspf/filters.hpp"
#include "gspf/graph.hpp"
#include "gspf/selection.hpp"

namespace gspf {

enum class GraphSource { sensor, knn_file, edge_list };
enum class SignalSource { synthetic, file, timevarying };

struct GraphSpec {
    GraphSource source = GraphSource::sensor;
    Index n = 50;
    int k = 7;
    std::uint64_t seed = 1;
    EdgeWeighting weighting = EdgeWeighting::gaussian;
    std::filesystem::path coords;  // station_id,lat,lon (knn-file) or node,x,y (edge-list)
    std::filesystem::path edges;
    bool geographic = true;        // knn-file: project lat/lon before the k-NN search
};

struct SignalSpec {
    SignalSource source = SignalSource::synthetic;
    std::optional<Index> bandwidth;  // defaults to frequency.size
    std::uint64_t seed = 7;
    double amplitude = 1.0;
    Index steps = 95;
    double drift = 0.05;
    std::vector<std::filesystem::path> paths;
};

struct ExperimentConfig {
    GraphSpec graph;
    SignalSpec signal;
    Index frequency_size = 20;
    FrequencyPolicy frequency_policy = FrequencyPolicy::energy;
    Index sampling_size = 30;
    SamplingObjective sampling_strategy = SamplingObjective::lambda_min;
    double alpha = 1.5;
    double gamma = 0.1;
    FilterConfig filter;
    bool p_explicit = false;  // false: p = alpha - 0.05
    Index iterations = 1000;
    Index runs = 100;
    std::uint64_t base_seed = 1;
    RpReading rp_reading = RpReading::flom_p_minus_2;
    std::filesystem::path output_directory = "gsp_output";

    /// Resolves derived defaults (p, bandwidth) and checks invariants,
    /// including that referenced files exist.
    void finalize();
    /// Flat `key = value` rendering used for the summary echo.
    std::map<std::string, std::string> to_map() const;
};

/// Parses flat `key = value` text; `#` starts a comment. Unknown keys and
/// malformed values raise parse-error. Relative paths resolve against
/// `base_dir`.
ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

/// Applies one `key = value` assignment.
void apply_setting(ExperimentConfig& config, const std::string& key, const std::string& value,
                   const std::filesystem::path& base_dir = {});

}  // namespace gspf
