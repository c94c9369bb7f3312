#include "gspf/analysis.hpp"

#include <cmath>
#include <string>

#include "gspf/error.hpp"

namespace gspf {

std::string to_string(RpReading reading) {
    return reading == RpReading::flom_p_minus_2 ? "flom-p-minus-2" : "bn-scaling";
}

RpReading parse_rp_reading(const std::string& text) {
    if (text == "flom-p-minus-2") return RpReading::flom_p_minus_2;
    if (text == "bn-scaling") return RpReading::bn_scaling;
    throw Error(ErrorCode::parse_error, "unknown R_p reading '" + text + "'");
}

double expected_rp(const AlphaStableModel& model, double p) {
    if (!(p > 1.0)) {
        throw Error(ErrorCode::invalid_order, "E{R_p} needs p > 1 so that p - 2 > -1");
    }
    if (p == 2.0) return 1.0;
    return flom(p - 2.0, model);
}

double expected_rp_clamped(const AlphaStableModel& model, double p, double epsilon) {
    const double pure = expected_rp(model, p);
    if (p == 2.0) return pure;
    // Inside |w| < eps the clamp replaces |w|^(p-2) by eps^(p-2):
    // 2 f(0) [eps^(p-1) - eps^(p-1) / (p-1)].
    const double tail = std::pow(epsilon, p - 1.0);
    return pure + 2.0 * density_at_zero(model) * (tail - tail / (p - 1.0));
}

double expected_rp(const AlphaStableModel& model, double p, RpReading reading) {
    if (reading == RpReading::flom_p_minus_2) return expected_rp(model, p);
    return std::pow(flom(p, model), p - 2.0);
}

void SteadyStateInputs::validate() const {
    if (b_n.rows() != b_n.cols() || b_n.rows() != d_s.n()) {
        throw Error(ErrorCode::dimension_mismatch, "B_n and D_S sizes differ");
    }
    if (!(p > 1.0 && p <= 2.0)) {
        throw Error(ErrorCode::invalid_parameter, "p must lie in (1, 2]");
    }
    if (!model.gaussian() && 2.0 * p - 2.0 >= model.alpha()) {
        throw Error(ErrorCode::infinite_moment, "E|w|^(2p-2) is infinite for 2p - 2 >= alpha");
    }
    if (!(mu > 0.0)) throw Error(ErrorCode::invalid_parameter, "mu must be positive");
    if (u_f && u_f->rows() != b_n.rows()) {
        throw Error(ErrorCode::dimension_mismatch, "band basis rows do not match B_n");
    }
}

Matrix stability_operator(const Matrix& b_n, const SamplingOperator& d_s, double expected_rp) {
    return b_n * d_s.mask().asDiagonal() * expected_rp;
}

double spectral_radius(const Matrix& m) {
    Eigen::EigenSolver<Matrix> solver(m, false);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::degenerate_system, "eigenvalue computation failed");
    }
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

double stability_mu_max(const Matrix& b_n, const SamplingOperator& d_s, const AlphaStableModel& model,
                        double p, RpReading reading) {
    if (b_n.rows() != d_s.n()) throw Error(ErrorCode::dimension_mismatch, "B_n and D_S sizes differ");
    const double lambda_max = spectral_radius(stability_operator(b_n, d_s, expected_rp(model, p, reading)));
    if (!(lambda_max > 1e-14)) {
        throw Error(ErrorCode::degenerate_system, "stability operator has zero spectral radius");
    }
    return 2.0 / lambda_max;
}

namespace {

// I - Z^T (x) Z, column-major vec convention.
template <bool Parallel>
Matrix kronecker_system(const Matrix& z) {
    const Index n = z.rows();
    const Index nn = n * n;
    Matrix k(nn, nn);
    // (Z^T (x) Z)(i*n + a, j*n + b) = Z(j, i) Z(a, b)
    auto fill_block = [&](Index i) {
        for (Index j = 0; j < n; ++j) {
            k.block(i * n, j * n, n, n) = -z(j, i) * z;
        }
    };
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
        for (Index i = 0; i < n; ++i) fill_block(i);
    } else {
        for (Index i = 0; i < n; ++i) fill_block(i);
    }
    k.diagonal().array() += 1.0;
    return k;
}

template <bool Parallel>
double kronecker_sum_impl(const Matrix& z, const Matrix& g) {
    if (z.rows() != z.cols() || g.rows() != z.rows() || g.cols() != z.cols()) {
        throw Error(ErrorCode::dimension_mismatch, "Z and G must be square and the same size");
    }
    const Index n = z.rows();
    const Matrix system = kronecker_system<Parallel>(z);
    const Matrix ident = Matrix::Identity(n, n);
    const Vector rhs = Eigen::Map<const Vector>(ident.data(), n * n);
    Eigen::PartialPivLU<Matrix> lu(system);
    const Vector v = lu.solve(rhs);
    if (!v.allFinite()) throw Error(ErrorCode::stability_violation, "I - Z^T (x) Z is singular");
    return Eigen::Map<const Vector>(g.data(), n * n).dot(v);
}

}  // namespace

double kronecker_steady_sum(const Matrix& z, const Matrix& g) { return kronecker_sum_impl<true>(z, g); }

double kronecker_steady_sum_serial(const Matrix& z, const Matrix& g) {
    return kronecker_sum_impl<false>(z, g);
}

double closed_form_steady_sum(const Matrix& z, const Matrix& g) {
    if (z.rows() != z.cols() || g.rows() != z.rows() || g.cols() != z.cols()) {
        throw Error(ErrorCode::dimension_mismatch, "Z and G must be square and the same size");
    }
    const Index n = z.rows();
    const Matrix a = Matrix::Identity(n, n) - z * z;
    // tr(G^T A^{-1}) = tr(A^{-1} G^T)
    const Matrix w = a.partialPivLu().solve(g.transpose());
    return w.trace();
}

double theoretical_msd(const SteadyStateInputs& inputs) {
    inputs.validate();
    const double rp = expected_rp(inputs.model, inputs.p, inputs.reading);
    const double noise_moment = flom(2.0 * inputs.p - 2.0, inputs.model);
    const Index n = inputs.b_n.rows();
    const Matrix bd = inputs.b_n * inputs.d_s.mask().asDiagonal();
    Matrix z = Matrix::Identity(n, n) - inputs.mu * rp * bd;
    Matrix g = noise_moment * bd * inputs.b_n.transpose();
    if (inputs.u_f) {
        const Matrix& u = *inputs.u_f;
        z = u.transpose() * z * u;
        g = u.transpose() * g * u;
    }
    if (spectral_radius(z) >= 1.0) {
        throw Error(ErrorCode::stability_violation,
                    "step size violates the stability bound (rho(Z) >= 1)");
    }
    constexpr Index kKroneckerLimit = 64;
    const double sum = z.rows() <= kKroneckerLimit ? kronecker_steady_sum(z, g)
                                                   : closed_form_steady_sum(z, g);
    return inputs.mu * inputs.mu * sum;
}

double q_residual_with(const FilterOperators& ops, const Vector& y, const Vector& x, double p,
                       const Matrix& m) {
    const Vector r = ops.sampled_residual(x, y);
    if (r.size() == 0) return 0.0;
    const Vector fitted = ops.u_s() * (m * (ops.u_s().transpose() * signed_power(r, p)));
    return (fitted - r).cwiseAbs().maxCoeff();
}

double q_residual(const FilterOperators& ops, const Vector& y, const Vector& x, double p,
                  double epsilon, double ridge) {
    const Vector r = ops.sampled_residual(x, y);
    if (r.size() == 0 || r.cwiseAbs().maxCoeff() == 0.0) return 0.0;
    return q_residual_with(ops, y, x, p, convergence_matrix(x, y, ops, p, {epsilon, ridge}));
}

}  // namespace gspf
