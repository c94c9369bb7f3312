#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gspf/graph.hpp"

namespace gspf {

/// x_0 = U_F s with s_i i.i.d. uniform on [-amplitude, amplitude].
Vector synth_bandlimited_signal(const LaplacianEigensystem& es, const IndexSet& freq_set,
                                std::uint64_t seed, double amplitude = 1.0);

/// Bandlimited random walk in the spectral domain:
/// s[0] uniform on [-amplitude, amplitude], s[k+1] = s[k] + drift * eta[k],
/// eta standard normal. Returns `steps` frames.
std::vector<Vector> synth_timevarying_signal(const LaplacianEigensystem& es, const IndexSet& freq_set,
                                             Index steps, double drift, std::uint64_t seed,
                                             double amplitude = 1.0);

/// Station coordinates plus one n x steps matrix per feature, rows in the
/// order of the coordinates file.
struct StationData {
    std::vector<std::string> station_ids;
    Matrix lat_lon;                 // n x 2, degrees
    std::vector<Matrix> features;   // d matrices, each n x steps

    Index stations() const noexcept { return lat_lon.rows(); }
    Index steps() const noexcept { return features.empty() ? 0 : features.front().cols(); }
    Index feature_count() const noexcept { return static_cast<Index>(features.size()); }
    /// Value at (station, step, feature).
    double at(Index station, Index step, Index feature) const { return features[feature](station, step); }
};

/// Reads `station_id,lat,lon` coordinates and wide feature files whose header
/// row lists station ids (any order) and whose rows are time steps. Missing,
/// ragged or non-numeric cells are rejected.
StationData ingest_stations(const std::filesystem::path& coords_path,
                            const std::vector<std::filesystem::path>& feature_paths);

}  // namespace gspf
