#include "gspf/filters.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gspf/error.hpp"

namespace gspf {

std::string to_string(Algorithm algorithm) {
    switch (algorithm) {
    case Algorithm::glms: return "glms";
    case Algorithm::gnlms: return "gnlms";
    case Algorithm::glmp: return "glmp";
    case Algorithm::gnlmp_full: return "gnlmp-full";
    case Algorithm::gnlmp_approx: return "gnlmp-approx";
    case Algorithm::gnlmp_threshold: return "gnlmp-threshold";
    }
    return "unknown";
}

Algorithm parse_algorithm(const std::string& text) {
    for (Algorithm a : {Algorithm::glms, Algorithm::gnlms, Algorithm::glmp, Algorithm::gnlmp_full,
                        Algorithm::gnlmp_approx, Algorithm::gnlmp_threshold}) {
        if (text == to_string(a)) return a;
    }
    if (text == "gnlmp") return Algorithm::gnlmp_threshold;
    throw Error(ErrorCode::parse_error, "unknown algorithm '" + text + "'");
}

bool is_md_algorithm(Algorithm algorithm) {
    return algorithm != Algorithm::glms && algorithm != Algorithm::gnlms;
}

void FilterConfig::validate() const {
    if (!(mu > 0.0) || !std::isfinite(mu)) {
        throw Error(ErrorCode::invalid_parameter, "step size mu must be positive");
    }
    for (double m : mu_list) {
        if (!(m > 0.0) || !std::isfinite(m)) {
            throw Error(ErrorCode::invalid_parameter, "per-feature step sizes must be positive");
        }
    }
    if (!(p > 1.0 && p <= 2.0)) {
        throw Error(ErrorCode::invalid_parameter, "norm order p must lie in (1, 2]");
    }
    if (!(epsilon_clamp > 0.0)) {
        throw Error(ErrorCode::invalid_parameter, "epsilon clamp must be positive");
    }
    if (!(ridge_delta >= 0.0)) {
        throw Error(ErrorCode::invalid_parameter, "ridge delta must be nonnegative");
    }
}

FilterOperators::FilterOperators(const BandlimitOperator& blo, const SamplingOperator& ds)
    : u_f_(blo.u_f()), b_(blo.b()), ds_(ds) {
    if (ds.n() != blo.n()) {
        throw Error(ErrorCode::dimension_mismatch, "sampling operator size does not match band");
    }
    const auto& idx = ds_.sorted();
    const auto s = static_cast<Index>(idx.size());
    u_s_.resize(s, u_f_.cols());
    b_cols_.resize(n(), s);
    for (Index r = 0; r < s; ++r) {
        u_s_.row(r) = u_f_.row(idx[r]);
        b_cols_.col(r) = b_.col(idx[r]);
    }
    gram_ = u_s_.transpose() * u_s_;
    Eigen::LLT<Matrix> llt(gram_);
    if (s > 0 && llt.info() == Eigen::Success && llt.rcond() > 1e-13) {
        m_n_ = llt.solve(Matrix::Identity(bandwidth(), bandwidth()));
        gnlms_cols_ = u_f_ * (*m_n_ * u_s_.transpose());
    }
}

const Matrix& FilterOperators::m_n() const {
    if (!m_n_) throw Error(ErrorCode::singular_sampling, "U_F^T D_S U_F is singular");
    return *m_n_;
}

const Matrix& FilterOperators::gnlms_cols() const {
    if (!gnlms_cols_) throw Error(ErrorCode::singular_sampling, "U_F^T D_S U_F is singular");
    return *gnlms_cols_;
}

Vector FilterOperators::sampled_residual(const Vector& x, const Vector& y) const {
    if (x.size() != n() || y.size() != n()) {
        throw Error(ErrorCode::dimension_mismatch, "estimate/observation length does not match graph");
    }
    const auto& idx = sampled();
    Vector r(static_cast<Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const double v = y[idx[i]] - x[idx[i]];
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::invalid_observation,
                        "non-finite residual at node " + std::to_string(idx[i]));
        }
        r[static_cast<Index>(i)] = v;
    }
    return r;
}

Vector FilterOperators::scatter(const Vector& sampled_values) const {
    Vector out = Vector::Zero(n());
    const auto& idx = sampled();
    for (std::size_t i = 0; i < idx.size(); ++i) out[idx[i]] = sampled_values[static_cast<Index>(i)];
    return out;
}

ConvergenceMatrices build_bn_scalar(const FilterOperators& ops, double r_scalar) {
    if (!(r_scalar > 0.0) || !std::isfinite(r_scalar)) {
        throw Error(ErrorCode::invalid_parameter, "R scalar must be positive and finite");
    }
    ConvergenceMatrices cm;
    cm.r_scalar = r_scalar;
    cm.m_n = ops.m_n();
    // (U_F^T D_S (r I) U_F)^{-1} = M_n / r
    cm.b_n = ops.u_f() * (cm.m_n / r_scalar) * ops.u_f().transpose();
    cm.b_n_cols = ops.gnlms_cols() / r_scalar;
    return cm;
}

ConvergenceMatrices build_bn(const FilterOperators& ops, const AlphaStableModel& model, double p) {
    const double moment = flom(p, model);
    return build_bn_scalar(ops, std::pow(moment, p - 2.0));
}

Vector signed_power(const Vector& e, double p) {
    if (p == 2.0) return e;
    Vector out(e.size());
    for (Index i = 0; i < e.size(); ++i) {
        const double v = e[i];
        const double mag = std::pow(std::abs(v), p - 1.0);
        out[i] = v > 0.0 ? mag : (v < 0.0 ? -mag : 0.0);
    }
    return out;
}

Vector glms_step(const Vector& x, const Vector& y, const FilterOperators& ops, double mu) {
    const Vector r = ops.sampled_residual(x, y);
    return x + mu * (ops.b_cols() * r);
}

Vector gnlms_step(const Vector& x, const Vector& y, const FilterOperators& ops, double mu) {
    const Vector r = ops.sampled_residual(x, y);
    return x + mu * (ops.gnlms_cols() * r);
}

Vector glmp_step(const Vector& x, const Vector& y, const FilterOperators& ops, double mu, double p) {
    const Vector r = ops.sampled_residual(x, y);
    return x + mu * (ops.b_cols() * signed_power(r, p));
}

namespace {

// Factor of U_S^T diag(w) U_S + ridge I with w = max(|r|, eps)^(p-2). `phi`
// is signed_power(r, p), so w = phi / r away from the clamp.
Eigen::LLT<Matrix> weighted_gram(const Vector& r, const Vector& phi, const FilterOperators& ops, double p,
                                 const FullStepOptions& options) {
    const double clamped = std::pow(options.epsilon, p - 2.0);
    Matrix scaled(ops.u_s().rows(), ops.u_s().cols());
    for (Index i = 0; i < r.size(); ++i) {
        double w = 1.0;
        if (p != 2.0) w = std::abs(r[i]) >= options.epsilon ? phi[i] / r[i] : clamped;
        scaled.row(i) = std::sqrt(w) * ops.u_s().row(i);
    }
    Matrix g = Matrix::Zero(ops.bandwidth(), ops.bandwidth());
    g.selfadjointView<Eigen::Lower>().rankUpdate(scaled.transpose());
    g.diagonal().array() += options.ridge;
    Eigen::LLT<Matrix> llt(g);
    if (llt.info() != Eigen::Success || !(llt.rcond() > 1e-15)) {
        throw Error(ErrorCode::singular_normalization, "weighted sampled Gram matrix is singular");
    }
    return llt;
}

Vector full_update(const Vector& r, const Vector& phi, const FilterOperators& ops, double p,
                   const FullStepOptions& options) {
    const auto llt = weighted_gram(r, phi, ops, p, options);
    const Vector coeffs = llt.solve(ops.u_s().transpose() * phi);
    return ops.u_f() * coeffs;
}

}  // namespace

Matrix convergence_matrix(const Vector& x, const Vector& y, const FilterOperators& ops, double p,
                          const FullStepOptions& options) {
    const Vector r = ops.sampled_residual(x, y);
    const auto llt = weighted_gram(r, signed_power(r, p), ops, p, options);
    return llt.solve(Matrix::Identity(ops.bandwidth(), ops.bandwidth()));
}

Vector gnlmp_full_step(const Vector& x, const Vector& y, const FilterOperators& ops, double mu,
                       double p, const FullStepOptions& options) {
    const Vector r = ops.sampled_residual(x, y);
    return x + mu * full_update(r, signed_power(r, p), ops, p, options);
}

Vector gnlmp_approx_step(const Vector& x, const Vector& y, const FilterOperators& ops,
                         const ConvergenceMatrices& cm, double mu, double p) {
    const Vector r = ops.sampled_residual(x, y);
    return x + mu * (cm.b_n_cols * signed_power(r, p));
}

Matrix multifeature_gnlmp_step(const Matrix& x, const Matrix& y, const FilterOperators& ops,
                               const ConvergenceMatrices& cm, const std::vector<double>& mu_list,
                               double p) {
    const auto d = static_cast<Index>(mu_list.size());
    if (d < 1 || x.cols() != d || y.cols() != d) {
        throw Error(ErrorCode::dimension_mismatch, "feature count differs between M_mu and the signals");
    }
    if (x.rows() != ops.n() || y.rows() != ops.n()) {
        throw Error(ErrorCode::dimension_mismatch, "signal rows do not match graph size");
    }
    const auto& idx = ops.sampled();
    Matrix phi(static_cast<Index>(idx.size()), d);
    for (Index j = 0; j < d; ++j) {
        phi.col(j) = signed_power(ops.sampled_residual(x.col(j), y.col(j)), p);
    }
    const Vector mus = Eigen::Map<const Vector>(mu_list.data(), d);
    return x + (cm.b_n_cols * phi) * mus.asDiagonal();
}

double gnlmp_threshold(const FilterOperators& ops, const AlphaStableModel& model, double p) {
    return static_cast<double>(ops.sampled().size()) * flom(p - 1.0, model);
}

AdaptiveFilter::AdaptiveFilter(const FilterOperators& ops, const FilterConfig& config,
                               const AlphaStableModel& model,
                               std::shared_ptr<const ConvergenceMatrices> cm)
    : ops_(&ops), config_(config), cm_(std::move(cm)), estimate_(Vector::Zero(ops.n())) {
    config_.validate();
    const auto a = config_.algorithm;
    if (a == Algorithm::gnlms) (void)ops.m_n();
    if ((a == Algorithm::gnlmp_approx || a == Algorithm::gnlmp_threshold) && !cm_) {
        cm_ = std::make_shared<const ConvergenceMatrices>(build_bn(ops, model, config_.p));
    }
    if (a == Algorithm::gnlmp_threshold) {
        threshold_ = config_.threshold ? *config_.threshold : gnlmp_threshold(ops, model, config_.p);
    }
}

void AdaptiveFilter::reset(const Vector& initial) {
    if (initial.size() != ops_->n()) {
        throw Error(ErrorCode::dimension_mismatch, "initial estimate length does not match graph");
    }
    estimate_ = initial;
    iteration_ = 0;
}

Branch AdaptiveFilter::step(const Vector& y) {
    const Vector r = ops_->sampled_residual(estimate_, y);
    const double mu = config_.mu;
    const double p = config_.p;
    const FullStepOptions opts{config_.epsilon_clamp, config_.ridge_delta};
    Branch branch = Branch::none;
    switch (config_.algorithm) {
    case Algorithm::glms:
        estimate_.noalias() += mu * (ops_->b_cols() * r);
        break;
    case Algorithm::gnlms:
        estimate_.noalias() += mu * (ops_->gnlms_cols() * r);
        break;
    case Algorithm::glmp:
        estimate_.noalias() += mu * (ops_->b_cols() * signed_power(r, p));
        break;
    case Algorithm::gnlmp_full:
        estimate_.noalias() += mu * full_update(r, signed_power(r, p), *ops_, p, opts);
        branch = Branch::full;
        break;
    case Algorithm::gnlmp_approx:
        estimate_.noalias() += mu * (cm_->b_n_cols * signed_power(r, p));
        branch = Branch::approx;
        break;
    case Algorithm::gnlmp_threshold: {
        const Vector phi = signed_power(r, p);
        if (phi.cwiseAbs().sum() < threshold_) {
            estimate_.noalias() += mu * (cm_->b_n_cols * phi);
            branch = Branch::approx;
        } else {
            estimate_.noalias() += mu * full_update(r, phi, *ops_, p, opts);
            branch = Branch::full;
        }
        break;
    }
    }
    ++iteration_;
    return branch;
}

ThresholdTrajectory gnlmp_threshold_run(const Vector& initial, const ObservationStream& observe,
                                        const FilterOperators& ops, const ConvergenceMatrices& cm,
                                        const FilterConfig& config, const AlphaStableModel& model,
                                        std::int64_t max_iter) {
    if (max_iter <= 0) throw Error(ErrorCode::invalid_parameter, "max_iter must be positive");
    FilterConfig cfg = config;
    cfg.algorithm = Algorithm::gnlmp_threshold;
    AdaptiveFilter filter(ops, cfg, model, std::make_shared<const ConvergenceMatrices>(cm));
    filter.reset(initial);
    ThresholdTrajectory out;
    out.threshold = filter.threshold();
    out.estimates.reserve(static_cast<std::size_t>(max_iter) + 1);
    out.estimates.push_back(initial);
    for (std::int64_t k = 0; k < max_iter; ++k) {
        out.branches.push_back(filter.step(observe(k)));
        out.estimates.push_back(filter.estimate());
    }
    return out;
}

}  // namespace gspf
