#include "gspf/metrics.hpp"

#include <cmath>
#include <string>

#include "gspf/error.hpp"

namespace gspf {

double to_db(double value) { return 10.0 * std::log10(value); }

std::vector<double> running_nmsd(const std::vector<double>& msd, const std::vector<double>& truth_energy) {
    if (msd.size() != truth_energy.size()) {
        throw Error(ErrorCode::dimension_mismatch, "MSD and truth energy lengths differ");
    }
    std::vector<double> out(msd.size());
    double acc = 0.0;
    for (std::size_t k = 0; k < msd.size(); ++k) {
        if (!(truth_energy[k] > 0.0)) {
            throw Error(ErrorCode::degenerate_frame, "truth frame " + std::to_string(k + 1) + " has zero energy");
        }
        acc += msd[k] / truth_energy[k];
        out[k] = acc / static_cast<double>(k + 1);
    }
    return out;
}

MetricSeries compute_metrics(const std::vector<Vector>& trajectory, const std::vector<Vector>& truth,
                             MetricMode mode) {
    if (truth.empty() || (truth.size() != 1 && truth.size() != trajectory.size())) {
        throw Error(ErrorCode::dimension_mismatch, "truth must have one frame or one per estimate");
    }
    MetricSeries out;
    out.runs = 1;
    std::vector<double> energy;
    for (std::size_t k = 0; k < trajectory.size(); ++k) {
        const Vector& x0 = truth.size() == 1 ? truth.front() : truth[k];
        if (trajectory[k].size() != x0.size()) {
            throw Error(ErrorCode::dimension_mismatch, "estimate and truth lengths differ");
        }
        out.msd.push_back((trajectory[k] - x0).squaredNorm());
        energy.push_back(x0.squaredNorm());
    }
    if (mode == MetricMode::time_varying) out.nmsd = running_nmsd(out.msd, energy);
    return out;
}

double tail_mean(const std::vector<double>& values, Index tail) {
    if (tail < 1 || tail > static_cast<Index>(values.size())) {
        throw Error(ErrorCode::invalid_parameter, "tail length out of range");
    }
    double acc = 0.0;
    for (auto it = values.end() - tail; it != values.end(); ++it) acc += *it;
    return acc / static_cast<double>(tail);
}

}  // namespace gspf
