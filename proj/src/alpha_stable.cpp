#include "gspf/alpha_stable.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gspf/error.hpp"

namespace gspf {

AlphaStableModel::AlphaStableModel(double alpha, double gamma, double location)
    : alpha_(alpha), gamma_(gamma), location_(location) {
    if (!(alpha > 1.0 && alpha <= 2.0)) {
        throw Error(ErrorCode::invalid_parameter, "alpha must lie in (1, 2], got " + std::to_string(alpha));
    }
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw Error(ErrorCode::invalid_parameter, "gamma must be positive");
    }
    if (!std::isfinite(location)) {
        throw Error(ErrorCode::invalid_parameter, "location must be finite");
    }
}

double AlphaStableModel::scale() const noexcept { return std::pow(gamma_, 1.0 / alpha_); }

namespace {

// Uniform on the open interval (0, 1).
double open_unit(Rng& rng) {
    while (true) {
        const double u = std::generate_canonical<double, 53>(rng);
        if (u > 0.0) return u;
    }
}

}  // namespace

double draw_sas(const AlphaStableModel& model, Rng& rng) {
    using std::numbers::pi;
    const double a = model.alpha();
    const double v = pi * (open_unit(rng) - 0.5);
    const double w = -std::log(open_unit(rng));
    double x;
    if (model.gaussian()) {
        // alpha = 2 collapses to 2 sin(V) sqrt(W), a N(0, 2) variate.
        x = 2.0 * std::sin(v) * std::sqrt(w);
    } else {
        x = std::sin(a * v) / std::pow(std::cos(v), 1.0 / a) *
            std::pow(std::cos((1.0 - a) * v) / w, (1.0 - a) / a);
    }
    return model.scale() * x + model.location();
}

void fill_sas(const AlphaStableModel& model, Rng& rng, Eigen::Ref<Vector> out) {
    for (Index i = 0; i < out.size(); ++i) out[i] = draw_sas(model, rng);
}

Vector sample_sas(const AlphaStableModel& model, Index count, std::uint64_t seed) {
    if (count < 1) throw Error(ErrorCode::invalid_parameter, "sample count must be positive");
    Rng rng(seed);
    Vector out(count);
    fill_sas(model, rng, out);
    return out;
}

double flom_constant(double p, double alpha) {
    using std::numbers::pi;
    if (p == 0.0) return 1.0;
    if (alpha == 2.0) {
        return std::pow(2.0, p) * std::tgamma((p + 1.0) / 2.0) / std::sqrt(pi);
    }
    return std::pow(2.0, p + 1.0) * std::tgamma((p + 1.0) / 2.0) * std::tgamma(-p / alpha) /
           (alpha * std::sqrt(pi) * std::tgamma(-p / 2.0));
}

double flom(double p, const AlphaStableModel& model) {
    if (!(p > -1.0)) {
        throw Error(ErrorCode::invalid_order, "moment order must exceed -1, got " + std::to_string(p));
    }
    if (!model.gaussian() && p >= model.alpha()) {
        throw Error(ErrorCode::infinite_moment, "moment order " + std::to_string(p) +
                                                    " is not below alpha " +
                                                    std::to_string(model.alpha()));
    }
    return flom_constant(p, model.alpha()) * std::pow(model.gamma(), p / model.alpha());
}

std::complex<double> char_fn(const AlphaStableModel& model, double t) {
    const double mag = std::exp(-model.gamma() * std::pow(std::abs(t), model.alpha()));
    return std::polar(mag, model.location() * t);
}

double density_at_zero(const AlphaStableModel& model) {
    return std::tgamma(1.0 + 1.0 / model.alpha()) / (std::numbers::pi * model.scale());
}

}  // namespace gspf
