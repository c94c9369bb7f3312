#pragma once

#include <cstdint>
#include <optional>

#include "gspf/types.hpp"

namespace gspf {

/// Undirected weighted graph held as a dense symmetric adjacency matrix.
/// Construction validates symmetry (1e-12), a zero diagonal and nonnegative
/// weights; instances are immutable afterwards.
class Graph {
public:
    explicit Graph(Matrix adjacency, std::optional<Matrix> coords = std::nullopt);

    Index size() const noexcept { return adjacency_.rows(); }
    const Matrix& adjacency() const noexcept { return adjacency_; }
    const std::optional<Matrix>& coords() const noexcept { return coords_; }

    /// Weighted degree: row sums of the adjacency.
    Vector degrees() const;
    /// Combinatorial Laplacian L = D - A.
    Matrix laplacian() const;
    Index edge_count() const;
    bool is_connected() const;

private:
    Matrix adjacency_;
    std::optional<Matrix> coords_;
};

enum class EdgeWeighting { gaussian, binary };

/// k-nearest-neighbour graph over planar positions (n x 2). Each node links
/// to its k closest nodes (ties toward the lower index) and the edge set is
/// the union of both directions. Gaussian weights are
/// exp(-d^2 / (2 * kernel_scale^2)).
Graph build_knn_graph(const Matrix& coords, int k, double kernel_scale,
                      EdgeWeighting weighting = EdgeWeighting::gaussian);

/// Mean distance from every node to its k nearest neighbours.
double mean_knn_distance(const Matrix& coords, int k);

/// Uniform positions on the unit square followed by build_knn_graph with
/// kernel_scale = mean k-NN distance. No connectivity check.
Graph sensor_graph_candidate(Index n, int k, std::uint64_t seed,
                             EdgeWeighting weighting = EdgeWeighting::gaussian);

/// Like sensor_graph_candidate, but disconnected draws are rejected and the
/// seed is incremented until a connected graph appears.
Graph random_sensor_graph(Index n, int k, std::uint64_t seed,
                          EdgeWeighting weighting = EdgeWeighting::gaussian);

/// Projects latitude/longitude degrees (n x 2, columns lat, lon) to planar
/// kilometres using an equirectangular map centred on the mean latitude.
/// Output columns are (x, y).
Matrix equirectangular_km(const Matrix& lat_lon);

struct LaplacianEigensystem {
    Vector eigenvalues;   // ascending
    Matrix eigenvectors;  // columns match eigenvalues

    Index size() const noexcept { return eigenvalues.size(); }
};

LaplacianEigensystem eigensystem(const Graph& graph);
/// Decomposes an explicit symmetric matrix. Throws invalid-input when it is
/// not symmetric within 1e-12.
LaplacianEigensystem eigensystem(const Matrix& laplacian);

/// Graph Fourier transform s = U^T x.
Vector gft(const LaplacianEigensystem& es, const Vector& x);
/// Inverse transform x = U s.
Vector igft(const LaplacianEigensystem& es, const Vector& s);

/// Projector onto the span of the eigenvectors listed in freq_set.
class BandlimitOperator {
public:
    BandlimitOperator(const LaplacianEigensystem& es, IndexSet freq_set);

    const IndexSet& freq_set() const noexcept { return freq_set_; }
    const Matrix& u_f() const noexcept { return u_f_; }
    const Matrix& b() const noexcept { return b_; }
    Index n() const noexcept { return u_f_.rows(); }
    Index bandwidth() const noexcept { return u_f_.cols(); }

    Vector apply(const Vector& x) const;

private:
    IndexSet freq_set_;
    Matrix u_f_;
    Matrix b_;
};

BandlimitOperator bandlimit(const LaplacianEigensystem& es, const IndexSet& freq_set);

/// Diagonal 0/1 node-selection operator D_S.
class SamplingOperator {
public:
    SamplingOperator(Index n, IndexSet sample_set);

    Index n() const noexcept { return mask_.size(); }
    Index size() const noexcept { return static_cast<Index>(sample_set_.size()); }
    const IndexSet& sample_set() const noexcept { return sample_set_; }
    /// Sampled node indices in ascending order.
    const IndexSet& sorted() const noexcept { return sorted_; }
    const Vector& mask() const noexcept { return mask_; }
    bool contains(Index node) const { return mask_[node] != 0.0; }
    Matrix matrix() const { return mask_.asDiagonal(); }

private:
    IndexSet sample_set_;
    IndexSet sorted_;
    Vector mask_;
};

Vector apply_sampling(const SamplingOperator& ds, const Vector& x);

}  // namespace gspf
