#include "axial/expint.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace axial {

namespace {

// E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
double e1_series(double x) {
    double sum = 0.0;
    double term = 1.0;
    for (int k = 1; k <= 60; ++k) {
        term *= -x / k;
        const double contrib = -term / k;
        sum += contrib;
        if (std::abs(contrib) < 1e-17 * std::abs(sum)) break;
    }
    return -std::numbers::egamma - std::log(x) + sum;
}

// E1(x) = exp(-x) / (x + 1/(1 + 1/(x + 2/(1 + 2/(x + ...)))))  (Lentz)
double e1_contfrac(double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int k = 1; k <= 200; ++k) {
        const double a = -static_cast<double>(k) * k;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x);
}

}  // namespace

double expint_e1(double x) {
    if (!(x > 0.0)) throw std::domain_error("expint_e1: argument must be > 0");
    if (x >= 700.0) return 0.0;  // below double underflow of exp(-x)/x
    return x < 1.0 ? e1_series(x) : e1_contfrac(x);
}

}  // namespace axial
