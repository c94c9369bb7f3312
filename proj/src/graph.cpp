#include "gspf/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <queue>
#include <random>
#include <string>

#include "gspf/error.hpp"

namespace gspf {

namespace {

constexpr double kSymmetryTol = 1e-12;

void require_symmetric(const Matrix& m, ErrorCode code, const char* what) {
    if (m.rows() != m.cols()) {
        throw Error(code, std::string(what) + " must be square");
    }
    if (!m.allFinite()) {
        throw Error(code, std::string(what) + " has non-finite entries");
    }
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol) {
        throw Error(code, std::string(what) + " is not symmetric");
    }
}

// Indices of the k nearest neighbours of every row, ties toward lower index.
std::vector<IndexSet> knn_indices(const Matrix& coords, int k, Matrix& dist) {
    const Index n = coords.rows();
    dist.resize(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            dist(i, j) = (coords.row(i) - coords.row(j)).norm();
        }
    }
    std::vector<IndexSet> nbrs(n);
    IndexSet order(n);
    for (Index i = 0; i < n; ++i) {
        std::iota(order.begin(), order.end(), Index{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](Index a, Index b) { return dist(i, a) < dist(i, b); });
        auto& out = nbrs[i];
        for (Index j : order) {
            if (j == i) continue;
            out.push_back(j);
            if (static_cast<int>(out.size()) == k) break;
        }
    }
    return nbrs;
}

void validate_knn_input(const Matrix& coords, int k) {
    if (coords.cols() != 2) {
        throw Error(ErrorCode::invalid_parameter, "coordinates must have two columns");
    }
    if (k < 1 || k >= coords.rows()) {
        throw Error(ErrorCode::invalid_parameter,
                    "k must satisfy 1 <= k < n (k=" + std::to_string(k) +
                        ", n=" + std::to_string(coords.rows()) + ")");
    }
    if (!coords.allFinite()) {
        throw Error(ErrorCode::degenerate_input, "coordinates contain non-finite values");
    }
    const Index n = coords.rows();
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            if (coords.row(i) == coords.row(j)) {
                throw Error(ErrorCode::degenerate_input,
                            "duplicate coordinates at nodes " + std::to_string(i) + " and " +
                                std::to_string(j));
            }
        }
    }
}

}  // namespace

Graph::Graph(Matrix adjacency, std::optional<Matrix> coords)
    : adjacency_(std::move(adjacency)), coords_(std::move(coords)) {
    require_symmetric(adjacency_, ErrorCode::invalid_input, "adjacency");
    if (adjacency_.diagonal().cwiseAbs().maxCoeff() != 0.0) {
        throw Error(ErrorCode::invalid_input, "adjacency has self-loops");
    }
    if (adjacency_.size() > 0 && adjacency_.minCoeff() < 0.0) {
        throw Error(ErrorCode::invalid_input, "adjacency has negative weights");
    }
    if (coords_ && coords_->rows() != adjacency_.rows()) {
        throw Error(ErrorCode::dimension_mismatch, "coordinate rows do not match node count");
    }
}

Vector Graph::degrees() const { return adjacency_.rowwise().sum(); }

Matrix Graph::laplacian() const {
    Matrix l = -adjacency_;
    l.diagonal() = degrees();
    return l;
}

Index Graph::edge_count() const {
    Index count = 0;
    for (Index i = 0; i < size(); ++i) {
        for (Index j = i + 1; j < size(); ++j) {
            if (adjacency_(i, j) > 0.0) ++count;
        }
    }
    return count;
}

bool Graph::is_connected() const {
    const Index n = size();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::queue<Index> frontier;
    frontier.push(0);
    seen[0] = 1;
    Index visited = 1;
    while (!frontier.empty()) {
        const Index u = frontier.front();
        frontier.pop();
        for (Index v = 0; v < n; ++v) {
            if (!seen[v] && adjacency_(u, v) > 0.0) {
                seen[v] = 1;
                ++visited;
                frontier.push(v);
            }
        }
    }
    return visited == n;
}

Graph build_knn_graph(const Matrix& coords, int k, double kernel_scale, EdgeWeighting weighting) {
    validate_knn_input(coords, k);
    if (!(kernel_scale > 0.0) || !std::isfinite(kernel_scale)) {
        throw Error(ErrorCode::invalid_parameter, "kernel_scale must be positive");
    }
    Matrix dist;
    const auto nbrs = knn_indices(coords, k, dist);
    const Index n = coords.rows();
    Matrix adj = Matrix::Zero(n, n);
    const double denom = 2.0 * kernel_scale * kernel_scale;
    for (Index i = 0; i < n; ++i) {
        for (Index j : nbrs[i]) {
            const double w = weighting == EdgeWeighting::binary
                                 ? 1.0
                                 : std::exp(-dist(i, j) * dist(i, j) / denom);
            adj(i, j) = w;
            adj(j, i) = w;
        }
    }
    return Graph(std::move(adj), coords);
}

double mean_knn_distance(const Matrix& coords, int k) {
    validate_knn_input(coords, k);
    Matrix dist;
    const auto nbrs = knn_indices(coords, k, dist);
    double total = 0.0;
    for (Index i = 0; i < coords.rows(); ++i) {
        for (Index j : nbrs[i]) total += dist(i, j);
    }
    return total / static_cast<double>(coords.rows() * k);
}

Graph sensor_graph_candidate(Index n, int k, std::uint64_t seed, EdgeWeighting weighting) {
    if (n <= k) {
        throw Error(ErrorCode::invalid_parameter, "sensor graph needs n > k");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Matrix coords(n, 2);
    for (Index i = 0; i < n; ++i) {
        coords(i, 0) = unit(rng);
        coords(i, 1) = unit(rng);
    }
    return build_knn_graph(coords, k, mean_knn_distance(coords, k), weighting);
}

Graph random_sensor_graph(Index n, int k, std::uint64_t seed, EdgeWeighting weighting) {
    constexpr int kMaxAttempts = 1000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Graph g = sensor_graph_candidate(n, k, seed + static_cast<std::uint64_t>(attempt), weighting);
        if (g.is_connected()) return g;
    }
    throw Error(ErrorCode::degenerate_input, "no connected sensor graph after 1000 seeds");
}

Matrix equirectangular_km(const Matrix& lat_lon) {
    if (lat_lon.cols() != 2) {
        throw Error(ErrorCode::invalid_parameter, "lat/lon input must have two columns");
    }
    constexpr double km_per_deg_lat = 110.574;
    constexpr double km_per_deg_lon = 111.320;
    const double lat0 = lat_lon.col(0).mean() * std::numbers::pi / 180.0;
    Matrix xy(lat_lon.rows(), 2);
    xy.col(0) = lat_lon.col(1) * (km_per_deg_lon * std::cos(lat0));
    xy.col(1) = lat_lon.col(0) * km_per_deg_lat;
    return xy;
}

LaplacianEigensystem eigensystem(const Graph& graph) { return eigensystem(graph.laplacian()); }

LaplacianEigensystem eigensystem(const Matrix& laplacian) {
    require_symmetric(laplacian, ErrorCode::invalid_input, "laplacian");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(laplacian);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::invalid_input, "eigendecomposition failed");
    }
    LaplacianEigensystem es{solver.eigenvalues(), solver.eigenvectors()};
    // Sign rule: the first entry with magnitude above 1e-8 is positive.
    for (Index c = 0; c < es.eigenvectors.cols(); ++c) {
        auto col = es.eigenvectors.col(c);
        for (Index r = 0; r < col.size(); ++r) {
            if (std::abs(col[r]) > 1e-8) {
                if (col[r] < 0.0) col = -col;
                break;
            }
        }
    }
    return es;
}

Vector gft(const LaplacianEigensystem& es, const Vector& x) {
    if (x.size() != es.size()) {
        throw Error(ErrorCode::dimension_mismatch, "signal length does not match graph size");
    }
    return es.eigenvectors.transpose() * x;
}

Vector igft(const LaplacianEigensystem& es, const Vector& s) {
    if (s.size() != es.size()) {
        throw Error(ErrorCode::dimension_mismatch, "spectrum length does not match graph size");
    }
    return es.eigenvectors * s;
}

BandlimitOperator::BandlimitOperator(const LaplacianEigensystem& es, IndexSet freq_set)
    : freq_set_(std::move(freq_set)) {
    const Index n = es.size();
    if (freq_set_.empty()) {
        throw Error(ErrorCode::invalid_parameter, "frequency set is empty");
    }
    std::vector<char> used(n, 0);
    for (Index f : freq_set_) {
        if (f < 0 || f >= n) {
            throw Error(ErrorCode::invalid_parameter, "frequency index " + std::to_string(f) +
                                                          " out of range");
        }
        if (used[f]) {
            throw Error(ErrorCode::invalid_parameter, "duplicate frequency index " +
                                                          std::to_string(f));
        }
        used[f] = 1;
    }
    u_f_.resize(n, static_cast<Index>(freq_set_.size()));
    for (std::size_t c = 0; c < freq_set_.size(); ++c) {
        u_f_.col(static_cast<Index>(c)) = es.eigenvectors.col(freq_set_[c]);
    }
    b_ = u_f_ * u_f_.transpose();
}

Vector BandlimitOperator::apply(const Vector& x) const {
    if (x.size() != n()) {
        throw Error(ErrorCode::dimension_mismatch, "signal length does not match operator");
    }
    return u_f_ * (u_f_.transpose() * x);
}

BandlimitOperator bandlimit(const LaplacianEigensystem& es, const IndexSet& freq_set) {
    return BandlimitOperator(es, freq_set);
}

SamplingOperator::SamplingOperator(Index n, IndexSet sample_set)
    : sample_set_(std::move(sample_set)), mask_(Vector::Zero(n)) {
    for (Index s : sample_set_) {
        if (s < 0 || s >= n) {
            throw Error(ErrorCode::invalid_parameter, "sample index " + std::to_string(s) +
                                                          " out of range");
        }
        if (mask_[s] != 0.0) {
            throw Error(ErrorCode::invalid_parameter, "duplicate sample index " +
                                                          std::to_string(s));
        }
        mask_[s] = 1.0;
    }
    sorted_ = sample_set_;
    std::sort(sorted_.begin(), sorted_.end());
}

Vector apply_sampling(const SamplingOperator& ds, const Vector& x) {
    if (x.size() != ds.n()) {
        throw Error(ErrorCode::dimension_mismatch, "signal length does not match sampling operator");
    }
    return ds.mask().cwiseProduct(x);
}

}  // namespace gspf
