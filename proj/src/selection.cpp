#include "gspf/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gspf/error.hpp"

namespace gspf {

namespace {

// Score of a candidate row set: the top-`rank` eigenvalues of the row Gram
// (equivalently of U_F^T D_S U_F) reduced by min or sum-of-logs.
double score_rows(const Matrix& rows, SamplingObjective objective) {
    const Index s = rows.rows();
    const Index f = rows.cols();
    Vector ev;
    if (s <= f) {
        const Matrix gram = rows * rows.transpose();
        ev = Eigen::SelfAdjointEigenSolver<Matrix>(gram, Eigen::EigenvaluesOnly).eigenvalues();
    } else {
        const Matrix gram = rows.transpose() * rows;
        ev = Eigen::SelfAdjointEigenSolver<Matrix>(gram, Eigen::EigenvaluesOnly).eigenvalues();
    }
    if (objective == SamplingObjective::lambda_min) return ev[0];
    double acc = 0.0;
    for (Index i = 0; i < ev.size(); ++i) {
        if (ev[i] <= 0.0) return -std::numeric_limits<double>::infinity();
        acc += std::log(ev[i]);
    }
    return acc;
}

Matrix gather_rows(const Matrix& u_f, const IndexSet& chosen, Index extra) {
    Matrix rows(static_cast<Index>(chosen.size()) + 1, u_f.cols());
    for (std::size_t r = 0; r < chosen.size(); ++r) rows.row(static_cast<Index>(r)) = u_f.row(chosen[r]);
    rows.row(rows.rows() - 1) = u_f.row(extra);
    return rows;
}

void validate_count(const BandlimitOperator& blo, Index count) {
    if (count < blo.bandwidth()) {
        throw Error(ErrorCode::infeasible_sampling,
                    "sample count " + std::to_string(count) + " below bandwidth " +
                        std::to_string(blo.bandwidth()));
    }
    if (count > blo.n()) {
        throw Error(ErrorCode::invalid_parameter, "sample count exceeds node count");
    }
}

bool better(double candidate, double best) {
    return candidate > best + 1e-12 * std::max(1.0, std::abs(best));
}

template <bool Parallel>
SelectionReport greedy_impl(const BandlimitOperator& blo, Index count, SamplingObjective objective) {
    validate_count(blo, count);
    const Index n = blo.n();
    const Matrix& u_f = blo.u_f();
    SelectionReport report;
    report.objective_name = to_string(objective);
    std::vector<char> taken(n, 0);
    std::vector<double> scores(n);
    constexpr double kNone = -std::numeric_limits<double>::infinity();

    for (Index step = 0; step < count; ++step) {
        if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic)
            for (Index v = 0; v < n; ++v) {
                scores[v] = taken[v] ? kNone : score_rows(gather_rows(u_f, report.chosen_set, v), objective);
            }
        } else {
            for (Index v = 0; v < n; ++v) {
                scores[v] = taken[v] ? kNone : score_rows(gather_rows(u_f, report.chosen_set, v), objective);
            }
        }
        Index best = -1;
        for (Index v = 0; v < n; ++v) {
            if (taken[v]) continue;
            if (best < 0 || better(scores[v], scores[best])) best = v;
        }
        taken[best] = 1;
        report.chosen_set.push_back(best);
        report.score_trace.push_back(
            sampling_lambda_min(blo, SamplingOperator(n, report.chosen_set)));
    }
    if (!(report.score_trace.back() > 1e-12)) {
        throw Error(ErrorCode::singular_sampling, "greedy sampling left U_F^T D_S U_F singular");
    }
    return report;
}

}  // namespace

IndexSet select_frequencies(const LaplacianEigensystem& es, const Vector& reference, Index count) {
    const Index n = es.size();
    if (count < 1 || count > n) {
        throw Error(ErrorCode::invalid_parameter, "frequency count out of range");
    }
    if (!reference.allFinite()) {
        throw Error(ErrorCode::invalid_input, "reference signal has non-finite entries");
    }
    const Vector mag = gft(es, reference).cwiseAbs();
    IndexSet order(n);
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return mag[a] > mag[b]; });
    IndexSet chosen(order.begin(), order.begin() + count);
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

IndexSet lowpass_frequencies(const LaplacianEigensystem& es, Index count) {
    if (count < 1 || count > es.size()) {
        throw Error(ErrorCode::invalid_parameter, "frequency count out of range");
    }
    IndexSet chosen(count);
    std::iota(chosen.begin(), chosen.end(), Index{0});
    return chosen;
}

double sampling_lambda_min(const BandlimitOperator& blo, const SamplingOperator& ds) {
    if (ds.n() != blo.n()) {
        throw Error(ErrorCode::dimension_mismatch, "sampling operator size does not match band");
    }
    const Matrix k = blo.u_f().transpose() * ds.mask().asDiagonal() * blo.u_f();
    return Eigen::SelfAdjointEigenSolver<Matrix>(k, Eigen::EigenvaluesOnly).eigenvalues()[0];
}

SelectionReport greedy_sample_report(const BandlimitOperator& blo, Index count,
                                     SamplingObjective objective) {
    return greedy_impl<true>(blo, count, objective);
}

SelectionReport greedy_sample_report_serial(const BandlimitOperator& blo, Index count,
                                            SamplingObjective objective) {
    return greedy_impl<false>(blo, count, objective);
}

SamplingOperator greedy_sample(const BandlimitOperator& blo, Index count, SamplingObjective objective) {
    return SamplingOperator(blo.n(), greedy_sample_report(blo, count, objective).chosen_set);
}

std::string to_string(SamplingObjective objective) {
    return objective == SamplingObjective::lambda_min ? "greedy-lambda-min" : "greedy-logdet";
}

std::string to_string(FrequencyPolicy policy) {
    return policy == FrequencyPolicy::energy ? "energy" : "lowpass";
}

SamplingObjective parse_sampling_objective(const std::string& text) {
    if (text == "greedy-lambda-min") return SamplingObjective::lambda_min;
    if (text == "greedy-logdet") return SamplingObjective::log_det;
    throw Error(ErrorCode::parse_error, "unknown sampling strategy '" + text + "'");
}

FrequencyPolicy parse_frequency_policy(const std::string& text) {
    if (text == "energy") return FrequencyPolicy::energy;
    if (text == "lowpass") return FrequencyPolicy::lowpass;
    throw Error(ErrorCode::parse_error, "unknown frequency policy '" + text + "'");
}

}  // namespace gspf
