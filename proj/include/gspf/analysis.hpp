#pragma once

#include <optional>

#include "gspf/alpha_stable.hpp"
#include "gspf/filters.hpp"

namespace gspf {

/// Which moment stands in for E{R_p} in the stability operator
/// B_n D_S E{R_p}.
///   flom_p_minus_2: E|w|^(p-2) = FLOM(p - 2), the expectation of
///                   |diag(w)|^(p-2).
///   bn_scaling:     FLOM(p)^(p-2), the same scalar R used to build B_n.
enum class RpReading { flom_p_minus_2, bn_scaling };

std::string to_string(RpReading reading);
RpReading parse_rp_reading(const std::string& text);

/// FLOM(p - 2); exactly 1 at p = 2.
double expected_rp(const AlphaStableModel& model, double p);
/// E max(|w|, eps)^(p-2), the moment seen by a simulation that clamps small
/// residuals. Uses the small-eps expansion around the density at zero.
double expected_rp_clamped(const AlphaStableModel& model, double p, double epsilon);
double expected_rp(const AlphaStableModel& model, double p, RpReading reading);

struct SteadyStateInputs {
    Matrix b_n;
    SamplingOperator d_s;
    AlphaStableModel model;
    double p = 1.45;
    double mu = 0.01;
    /// Orthonormal basis of range(B_n). When present the recursion is solved
    /// on that subspace, where it is contractive; outside it the error
    /// recursion is the identity and the full n^2 system is singular.
    std::optional<Matrix> u_f;
    RpReading reading = RpReading::flom_p_minus_2;

    void validate() const;
};

/// A_z = B_n D_S E{R_p}.
Matrix stability_operator(const Matrix& b_n, const SamplingOperator& d_s, double expected_rp);

/// 2 / rho(B_n D_S E{R_p}); throws degenerate-system when rho is zero.
double stability_mu_max(const Matrix& b_n, const SamplingOperator& d_s, const AlphaStableModel& model,
                        double p, RpReading reading = RpReading::flom_p_minus_2);

/// Largest eigenvalue magnitude of a general square matrix.
double spectral_radius(const Matrix& m);

/// vec(G)^T (I - Z^T (x) Z)^{-1} vec(I) by a dense LU solve of the n^2 system.
/// Assembly of the Kronecker matrix is OpenMP-parallel.
double kronecker_steady_sum(const Matrix& z, const Matrix& g);
/// Single-threaded assembly of the same system, kept as the reference.
double kronecker_steady_sum_serial(const Matrix& z, const Matrix& g);
/// Same quantity through (I - Z^T (x) Z)^{-1} vec(I) = vec((I - Z^2)^{-1}):
/// tr(G^T (I - Z^2)^{-1}), an n x n solve.
double closed_form_steady_sum(const Matrix& z, const Matrix& g);

/// mu^2 vec(G)^T (I - Z^T (x) Z)^{-1} vec(I) with Z = I - mu B_n D_S E{R_p}
/// and G = B_n D_S FLOM(2p - 2) D_S B_n.
double theoretical_msd(const SteadyStateInputs& inputs);

/// ||D_S U_F M U_F^T phi_p(e) - e||_inf for a given normalization M.
double q_residual_with(const FilterOperators& ops, const Vector& y, const Vector& x, double p,
                       const Matrix& m);
/// q_residual_with evaluated at M = M[k].
double q_residual(const FilterOperators& ops, const Vector& y, const Vector& x, double p,
                  double epsilon = 1e-8, double ridge = 0.0);

}  // namespace gspf
