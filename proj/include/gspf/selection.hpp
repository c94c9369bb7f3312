#pragma once

#include <string>

#include "gspf/graph.hpp"

namespace gspf {

enum class SamplingObjective { lambda_min, log_det };
enum class FrequencyPolicy { energy, lowpass };

struct SelectionReport {
    IndexSet chosen_set;            // in selection order
    std::vector<double> score_trace;  // lambda_min(U_F^T D_S U_F) after each step
    std::string objective_name;
};

/// The `count` indices with the largest |U^T reference| magnitudes, ties
/// toward the lower eigenvalue index. Returned in ascending order.
IndexSet select_frequencies(const LaplacianEigensystem& es, const Vector& reference, Index count);

/// The `count` lowest-eigenvalue indices.
IndexSet lowpass_frequencies(const LaplacianEigensystem& es, Index count);

/// Greedy node selection. Each step adds the node that maximises the
/// objective on U_F^T D_S U_F (ties toward lower node index). Before |S|
/// reaches |F| every candidate leaves U_F^T D_S U_F singular, so the score is
/// taken over its min(|S|, |F|) largest eigenvalues; from |S| = |F| on this is
/// exactly lambda_min (or log det).
SelectionReport greedy_sample_report(const BandlimitOperator& blo, Index count,
                                     SamplingObjective objective = SamplingObjective::lambda_min);

SamplingOperator greedy_sample(const BandlimitOperator& blo, Index count,
                               SamplingObjective objective = SamplingObjective::lambda_min);

/// lambda_min(U_F^T D_S U_F).
double sampling_lambda_min(const BandlimitOperator& blo, const SamplingOperator& ds);

/// Serial candidate scan used as the reference for the parallel greedy search.
SelectionReport greedy_sample_report_serial(const BandlimitOperator& blo, Index count,
                                            SamplingObjective objective = SamplingObjective::lambda_min);

std::string to_string(SamplingObjective objective);
std::string to_string(FrequencyPolicy policy);
SamplingObjective parse_sampling_objective(const std::string& text);
FrequencyPolicy parse_frequency_policy(const std::string& text);

}  // namespace gspf
