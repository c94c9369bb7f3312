#include "gspf/graph_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <string>
#include <tuple>

#include "csv.hpp"
#include "gspf/error.hpp"

namespace gspf {

namespace {

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot open " + path.string());
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::io_error, "cannot write " + path.string());
    out << std::setprecision(17);
    return out;
}

[[noreturn]] void bad_row(const std::filesystem::path& path, std::size_t line, const std::string& why) {
    throw Error(ErrorCode::parse_error, path.string() + ":" + std::to_string(line) + ": " + why);
}

}  // namespace

Graph read_edge_list(const std::filesystem::path& path, std::optional<Index> node_count) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line)) bad_row(path, 1, "missing header");
    std::vector<std::tuple<Index, Index, double>> edges;
    Index max_index = -1;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (csv::trim(line).empty()) continue;
        const auto cells = csv::split(line);
        long long i = 0;
        long long j = 0;
        double w = 0.0;
        if (cells.size() != 3 || !csv::parse_int(cells[0], i) || !csv::parse_int(cells[1], j) ||
            !csv::parse_double(cells[2], w)) {
            bad_row(path, lineno, "expected i,j,weight");
        }
        if (i < 0 || j < 0) bad_row(path, lineno, "negative node index");
        edges.emplace_back(i, j, w);
        max_index = std::max<Index>(max_index, std::max<Index>(i, j));
    }
    const Index n = node_count.value_or(max_index + 1);
    if (max_index >= n) {
        throw Error(ErrorCode::invalid_input, "edge index exceeds node count");
    }
    Matrix adj = Matrix::Zero(n, n);
    Matrix seen = Matrix::Zero(n, n);
    for (const auto& [i, j, w] : edges) {
        if (seen(i, j) != 0.0 && adj(i, j) != w) {
            throw Error(ErrorCode::invalid_input, "conflicting weights for edge " +
                                                      std::to_string(i) + "," + std::to_string(j));
        }
        adj(i, j) = w;
        seen(i, j) = 1.0;
    }
    // Single-direction entries are mirrored; two-direction entries must agree.
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            if (seen(i, j) != 0.0 && seen(j, i) != 0.0) {
                if (std::abs(adj(i, j) - adj(j, i)) > 1e-12) {
                    throw Error(ErrorCode::invalid_input, "asymmetric weights for edge " +
                                                              std::to_string(i) + "," +
                                                              std::to_string(j));
                }
            } else if (seen(i, j) != 0.0) {
                adj(j, i) = adj(i, j);
            } else if (seen(j, i) != 0.0) {
                adj(i, j) = adj(j, i);
            }
        }
    }
    return Graph(std::move(adj));
}

Matrix read_node_coords(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line)) bad_row(path, 1, "missing header");
    std::vector<std::tuple<Index, double, double>> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (csv::trim(line).empty()) continue;
        const auto cells = csv::split(line);
        long long node = 0;
        double x = 0.0;
        double y = 0.0;
        if (cells.size() != 3 || !csv::parse_int(cells[0], node) || !csv::parse_double(cells[1], x) ||
            !csv::parse_double(cells[2], y)) {
            bad_row(path, lineno, "expected node,x,y");
        }
        rows.emplace_back(node, x, y);
    }
    const auto n = static_cast<Index>(rows.size());
    Matrix coords(n, 2);
    std::vector<char> filled(n, 0);
    for (const auto& [node, x, y] : rows) {
        if (node < 0 || node >= n || filled[node]) {
            throw Error(ErrorCode::invalid_input, "node ids must be 0..n-1, each once");
        }
        filled[node] = 1;
        coords(node, 0) = x;
        coords(node, 1) = y;
    }
    return coords;
}

void write_edge_list(const Graph& graph, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "i,j,weight\n";
    const auto& a = graph.adjacency();
    for (Index i = 0; i < graph.size(); ++i) {
        for (Index j = i + 1; j < graph.size(); ++j) {
            if (a(i, j) > 0.0) out << i << ',' << j << ',' << a(i, j) << '\n';
        }
    }
}

void write_node_coords(const Matrix& coords, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "node,x,y\n";
    for (Index i = 0; i < coords.rows(); ++i) {
        out << i << ',' << coords(i, 0) << ',' << coords(i, 1) << '\n';
    }
}

Graph load_graph(const std::filesystem::path& edges,
                 const std::optional<std::filesystem::path>& coords) {
    if (!coords) return read_edge_list(edges);
    Matrix xy = read_node_coords(*coords);
    Graph g = read_edge_list(edges, xy.rows());
    return Graph(g.adjacency(), std::move(xy));
}

}  // namespace gspf
