#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include "gspf/types.hpp"

namespace gspf {

/// Symmetric alpha-stable law with characteristic function
/// exp(j mu t - gamma |t|^alpha), 1 < alpha <= 2.
class AlphaStableModel {
public:
    AlphaStableModel(double alpha, double gamma, double location = 0.0);

    double alpha() const noexcept { return alpha_; }
    double gamma() const noexcept { return gamma_; }
    double location() const noexcept { return location_; }
    /// Scale sigma = gamma^(1/alpha) of the standard parameterisation.
    double scale() const noexcept;
    bool gaussian() const noexcept { return alpha_ == 2.0; }

private:
    double alpha_;
    double gamma_;
    double location_;
};

using Rng = std::mt19937_64;

/// One draw via the Chambers-Mallows-Stuck transform (symmetric case).
double draw_sas(const AlphaStableModel& model, Rng& rng);

/// Fills `out` with i.i.d. draws from the model.
void fill_sas(const AlphaStableModel& model, Rng& rng, Eigen::Ref<Vector> out);

/// `count` i.i.d. draws from a generator seeded with `seed`.
Vector sample_sas(const AlphaStableModel& model, Index count, std::uint64_t seed);

/// Constant C(p, alpha) of the fractional lower-order moment E|X|^p = C gamma^(p/alpha).
double flom_constant(double p, double alpha);

/// E|X|^p for a zero-location SaS variable. Valid for -1 < p < alpha (any
/// p > -1 when alpha = 2); p = 0 returns 1.
double flom(double p, const AlphaStableModel& model);

std::complex<double> char_fn(const AlphaStableModel& model, double t);

/// Density at the origin, Gamma(1 + 1/alpha) / (pi gamma^(1/alpha)).
double density_at_zero(const AlphaStableModel& model);

}  // namespace gspf
