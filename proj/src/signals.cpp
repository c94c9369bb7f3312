#include "gspf/signals.hpp"

#include <array>
#include <fstream>
#include <random>
#include <unordered_map>

#include "csv.hpp"
#include "gspf/error.hpp"

namespace gspf {

namespace {

Vector spectral_embed(const LaplacianEigensystem& es, const IndexSet& freq_set, const Vector& s) {
    Vector x = Vector::Zero(es.size());
    for (std::size_t i = 0; i < freq_set.size(); ++i) {
        x += s[static_cast<Index>(i)] * es.eigenvectors.col(freq_set[i]);
    }
    return x;
}

void check_freq_set(const LaplacianEigensystem& es, const IndexSet& freq_set) {
    if (freq_set.empty()) throw Error(ErrorCode::invalid_parameter, "frequency set is empty");
    for (Index f : freq_set) {
        if (f < 0 || f >= es.size()) throw Error(ErrorCode::invalid_parameter, "frequency index out of range");
    }
}

}  // namespace

Vector synth_bandlimited_signal(const LaplacianEigensystem& es, const IndexSet& freq_set,
                                std::uint64_t seed, double amplitude) {
    check_freq_set(es, freq_set);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coef(-amplitude, amplitude);
    Vector s(static_cast<Index>(freq_set.size()));
    for (Index i = 0; i < s.size(); ++i) s[i] = coef(rng);
    return spectral_embed(es, freq_set, s);
}

std::vector<Vector> synth_timevarying_signal(const LaplacianEigensystem& es, const IndexSet& freq_set,
                                             Index steps, double drift, std::uint64_t seed,
                                             double amplitude) {
    check_freq_set(es, freq_set);
    if (steps < 1) throw Error(ErrorCode::invalid_parameter, "steps must be at least 1");
    if (!(drift >= 0.0)) throw Error(ErrorCode::invalid_parameter, "drift must be nonnegative");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coef(-amplitude, amplitude);
    std::normal_distribution<double> eta(0.0, 1.0);
    Vector s(static_cast<Index>(freq_set.size()));
    for (Index i = 0; i < s.size(); ++i) s[i] = coef(rng);
    std::vector<Vector> frames;
    frames.reserve(static_cast<std::size_t>(steps));
    for (Index k = 0; k < steps; ++k) {
        frames.push_back(spectral_embed(es, freq_set, s));
        for (Index i = 0; i < s.size(); ++i) s[i] += drift * eta(rng);
    }
    return frames;
}

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, std::size_t row, const std::string& what) {
    throw Error(ErrorCode::parse_error, path.string() + ": row " + std::to_string(row) + ": " + what);
}

}  // namespace

StationData ingest_stations(const std::filesystem::path& coords_path,
                            const std::vector<std::filesystem::path>& feature_paths) {
    StationData data;
    std::unordered_map<std::string, Index> slot;
    {
        std::ifstream in(coords_path);
        if (!in) throw Error(ErrorCode::io_error, "cannot open " + coords_path.string());
        std::string line;
        if (!std::getline(in, line)) fail(coords_path, 1, "missing header");
        std::vector<std::array<double, 2>> rows;
        std::size_t row = 1;
        while (std::getline(in, line)) {
            ++row;
            if (csv::trim(line).empty()) continue;
            const auto cells = csv::split(line);
            std::array<double, 2> ll{};
            if (cells.size() != 3) fail(coords_path, row, "expected station_id,lat,lon");
            if (cells[0].empty()) fail(coords_path, row, "empty station id");
            if (!csv::parse_double(cells[1], ll[0]) || !csv::parse_double(cells[2], ll[1])) {
                fail(coords_path, row, "non-numeric coordinate");
            }
            if (!slot.emplace(cells[0], static_cast<Index>(data.station_ids.size())).second) {
                fail(coords_path, row, "duplicate station id '" + cells[0] + "'");
            }
            data.station_ids.push_back(cells[0]);
            rows.push_back(ll);
        }
        data.lat_lon.resize(static_cast<Index>(rows.size()), 2);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            data.lat_lon(static_cast<Index>(i), 0) = rows[i][0];
            data.lat_lon(static_cast<Index>(i), 1) = rows[i][1];
        }
    }
    const Index n = data.stations();
    if (n == 0) throw Error(ErrorCode::invalid_input, "coordinates file lists no stations");

    for (const auto& path : feature_paths) {
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::io_error, "cannot open " + path.string());
        std::string line;
        if (!std::getline(in, line)) fail(path, 1, "missing header");
        const auto header = csv::split(line);
        if (static_cast<Index>(header.size()) != n) {
            fail(path, 1, "header lists " + std::to_string(header.size()) + " stations, expected " +
                              std::to_string(n));
        }
        std::vector<Index> column_slot(header.size());
        std::vector<char> covered(static_cast<std::size_t>(n), 0);
        for (std::size_t c = 0; c < header.size(); ++c) {
            const auto it = slot.find(header[c]);
            if (it == slot.end()) fail(path, 1, "unknown station id '" + header[c] + "'");
            if (covered[static_cast<std::size_t>(it->second)]) fail(path, 1, "duplicate station id '" + header[c] + "'");
            covered[static_cast<std::size_t>(it->second)] = 1;
            column_slot[c] = it->second;
        }
        std::vector<std::vector<double>> steps;
        std::size_t row = 1;
        while (std::getline(in, line)) {
            ++row;
            if (csv::trim(line).empty()) continue;
            const auto cells = csv::split(line);
            if (cells.size() != header.size()) {
                fail(path, row, "ragged row: " + std::to_string(cells.size()) + " cells, expected " +
                                    std::to_string(header.size()));
            }
            std::vector<double> values(static_cast<std::size_t>(n));
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (cells[c].empty()) fail(path, row, "missing value in column '" + header[c] + "'");
                double v = 0.0;
                if (!csv::parse_double(cells[c], v)) {
                    fail(path, row, "non-numeric value '" + cells[c] + "' in column '" + header[c] + "'");
                }
                values[static_cast<std::size_t>(column_slot[c])] = v;
            }
            steps.push_back(std::move(values));
        }
        if (steps.empty()) fail(path, row, "no time steps");
        if (!data.features.empty() && static_cast<Index>(steps.size()) != data.steps()) {
            throw Error(ErrorCode::invalid_input, path.string() + ": step count differs from earlier features");
        }
        Matrix m(n, static_cast<Index>(steps.size()));
        for (std::size_t k = 0; k < steps.size(); ++k) {
            for (Index i = 0; i < n; ++i) m(i, static_cast<Index>(k)) = steps[k][static_cast<std::size_t>(i)];
        }
        data.features.push_back(std::move(m));
    }
    return data;
}

}  // namespace gspf
