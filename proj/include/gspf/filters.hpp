#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gspf/alpha_stable.hpp"
#include "gspf/graph.hpp"

namespace gspf {

enum class Algorithm { glms, gnlms, glmp, gnlmp_full, gnlmp_approx, gnlmp_threshold };

std::string to_string(Algorithm algorithm);
Algorithm parse_algorithm(const std::string& text);
/// True for the lp-norm (minimum dispersion) family.
bool is_md_algorithm(Algorithm algorithm);

struct FilterConfig {
    Algorithm algorithm = Algorithm::gnlmp_threshold;
    double mu = 0.05;
    std::vector<double> mu_list;  // per-feature step sizes (multi-feature runs)
    double p = 1.45;
    double epsilon_clamp = 1e-8;
    double ridge_delta = 0.0;
    std::optional<double> threshold;  // overrides |S| * FLOM(p - 1) when set

    void validate() const;
};

/// Operators shared by every update rule, precomputed once per (F, S) pair
/// and immutable afterwards so Monte Carlo workers can share them.
class FilterOperators {
public:
    FilterOperators(const BandlimitOperator& blo, const SamplingOperator& ds);

    Index n() const noexcept { return u_f_.rows(); }
    Index bandwidth() const noexcept { return u_f_.cols(); }
    const Matrix& u_f() const noexcept { return u_f_; }
    const Matrix& b() const noexcept { return b_; }
    const SamplingOperator& sampling() const noexcept { return ds_; }
    /// Sampled node indices, ascending.
    const IndexSet& sampled() const noexcept { return ds_.sorted(); }
    /// Rows of U_F at the sampled nodes (|S| x |F|).
    const Matrix& u_s() const noexcept { return u_s_; }
    /// Columns of B at the sampled nodes (n x |S|).
    const Matrix& b_cols() const noexcept { return b_cols_; }
    /// U_F^T D_S U_F.
    const Matrix& sampled_gram() const noexcept { return gram_; }
    bool has_m_n() const noexcept { return m_n_.has_value(); }
    /// M_n = (U_F^T D_S U_F)^{-1}; throws singular-sampling when undefined.
    const Matrix& m_n() const;
    /// Columns of U_F M_n U_F^T at the sampled nodes (n x |S|).
    const Matrix& gnlms_cols() const;

    /// e restricted to sampled nodes: (y - x)_S. Throws invalid-observation
    /// on non-finite sampled entries.
    Vector sampled_residual(const Vector& x, const Vector& y) const;
    /// Scatters a length-|S| vector back to length n.
    Vector scatter(const Vector& sampled_values) const;

private:
    Matrix u_f_;
    Matrix b_;
    SamplingOperator ds_;
    Matrix u_s_;
    Matrix b_cols_;
    Matrix gram_;
    std::optional<Matrix> m_n_;
    std::optional<Matrix> gnlms_cols_;
};

/// M_n, B_n = U_F (U_F^T D_S R U_F)^{-1} U_F^T and R = r_scalar I.
struct ConvergenceMatrices {
    Matrix m_n;
    Matrix b_n;
    double r_scalar = 1.0;
    Matrix b_n_cols;  // columns of B_n at the sampled nodes (n x |S|)
};

/// R = FLOM(p)^(p-2) I.
ConvergenceMatrices build_bn(const FilterOperators& ops, const AlphaStableModel& model, double p);
/// Same construction with an explicit scalar R = r I.
ConvergenceMatrices build_bn_scalar(const FilterOperators& ops, double r_scalar);

/// Elementwise |e|^(p-1) sign(e) with sign(0) = 0.
Vector signed_power(const Vector& e, double p);

struct FullStepOptions {
    double epsilon = 1e-8;
    double ridge = 0.0;
};

Vector glms_step(const Vector& x, const Vector& y, const FilterOperators& ops, double mu);
Vector gnlms_step(const Vector& x, const Vector& y, const FilterOperators& ops, double mu);
Vector glmp_step(const Vector& x, const Vector& y, const FilterOperators& ops, double mu, double p);

/// M[k] = (U_F^T D_S diag(max(|y - x|, eps)^(p-2)) U_F + ridge I)^{-1}.
Matrix convergence_matrix(const Vector& x, const Vector& y, const FilterOperators& ops, double p,
                          const FullStepOptions& options = {});

Vector gnlmp_full_step(const Vector& x, const Vector& y, const FilterOperators& ops, double mu,
                       double p, const FullStepOptions& options = {});
Vector gnlmp_approx_step(const Vector& x, const Vector& y, const FilterOperators& ops,
                         const ConvergenceMatrices& cm, double mu, double p);

/// X[k+1] = X[k] + B_n phi_p(D_S (Y - X)) diag(mu_1..mu_d).
Matrix multifeature_gnlmp_step(const Matrix& x, const Matrix& y, const FilterOperators& ops,
                               const ConvergenceMatrices& cm, const std::vector<double>& mu_list,
                               double p);

enum class Branch : std::uint8_t { none, full, approx };

/// Switching threshold |S| * FLOM(p - 1).
double gnlmp_threshold(const FilterOperators& ops, const AlphaStableModel& model, double p);

/// Stateful single-feature filter used by the harness and the threshold run.
class AdaptiveFilter {
public:
    AdaptiveFilter(const FilterOperators& ops, const FilterConfig& config,
                   const AlphaStableModel& model,
                   std::shared_ptr<const ConvergenceMatrices> cm = nullptr);

    void reset(const Vector& initial);
    const Vector& estimate() const noexcept { return estimate_; }
    std::int64_t iteration() const noexcept { return iteration_; }
    double threshold() const noexcept { return threshold_; }

    /// Advances one iteration on observation y and reports the branch used
    /// (Branch::none for algorithms without branches).
    Branch step(const Vector& y);

private:
    const FilterOperators* ops_;
    FilterConfig config_;
    std::shared_ptr<const ConvergenceMatrices> cm_;
    double threshold_ = 0.0;
    Vector estimate_;
    std::int64_t iteration_ = 0;
};

struct ThresholdTrajectory {
    std::vector<Vector> estimates;  // estimates[0] is the initial state
    std::vector<Branch> branches;   // branches[k] produced estimates[k + 1]
    double threshold = 0.0;
};

using ObservationStream = std::function<Vector(std::int64_t k)>;

/// Threshold-switched GNLMP: approximated update when the sampled sum of
/// |e|^(p-1) falls below the threshold, full update otherwise.
ThresholdTrajectory gnlmp_threshold_run(const Vector& initial, const ObservationStream& observe,
                                        const FilterOperators& ops, const ConvergenceMatrices& cm,
                                        const FilterConfig& config, const AlphaStableModel& model,
                                        std::int64_t max_iter);

}  // namespace gspf
