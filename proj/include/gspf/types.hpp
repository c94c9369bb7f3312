#pragma once

#include <Eigen/Dense>
#include <vector>

namespace gspf {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Ordered set of node or frequency indices.
using IndexSet = std::vector<Index>;

}  // namespace gspf
