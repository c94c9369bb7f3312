#pragma once

#include <cmath>

// E|X|^p of SaS(alpha, gamma) from the characteristic function,
//   E|X|^p = (2/pi) Gamma(p+1) sin(p pi/2) int_0^inf (1 - exp(-gamma t^alpha)) t^(-p-1) dt,
// valid for 0 < p < alpha. Independent of the closed form under test.
inline double flom_by_quadrature(double p, double alpha, double gamma) {
    const double a = std::pow(gamma, -1.0 / alpha);  // gamma a^alpha = 1
    // [0, a]: termwise integration of the exponential series.
    double head = 0.0, coef = 1.0;
    for (int m = 1; m <= 40; ++m) {
        coef /= m;
        const double term = coef * std::pow(a, m * alpha - p) * std::pow(gamma, m) / (m * alpha - p);
        head += (m % 2 ? term : -term);
    }
    // [a, inf): t = a e^u, Simpson on [0, U] plus the algebraic tail.
    const double upper = 60.0 / p;
    const int steps = 400000;
    const double h = upper / steps;
    auto f = [&](double u) { return -std::expm1(-std::exp(alpha * u)) * std::exp(-p * u); };
    double acc = f(0.0) + f(upper);
    for (int i = 1; i < steps; ++i) acc += f(i * h) * (i % 2 ? 4.0 : 2.0);
    const double tail = std::pow(a, -p) * (acc * h / 3.0 + std::exp(-p * upper) / p);
    return 2.0 / M_PI * std::tgamma(p + 1.0) * std::sin(p * M_PI / 2.0) * (head + tail);
}
