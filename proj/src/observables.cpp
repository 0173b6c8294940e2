#include "axial/observables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "axial/quadrature.hpp"

namespace axial {

TildeFactors tilde_closed_form(const StateParams& p) {
    const double pref = std::sqrt((p.epsilon - 1.0) / (p.epsilon + 1.0));
    const double ratio = (p.epsilon - 1.0) / (p.epsilon + 1.0);
    const double ch = std::cosh(p.beta / 2.0);
    const double sh = std::sinh(p.beta / 2.0);
    const double ss = std::sin(p.theta) * std::sin(p.phi);

    TildeFactors t;
    t.nu_z = 2.0 * pref * (ch - sh * ss);
    t.nu_alpha = 2.0 * pref * sh * std::cos(p.theta);
    t.nu_r = 0.0;
    t.n_t = 1.0 + ratio * (std::cosh(p.beta) - std::sinh(p.beta) * ss);
    return t;
}

namespace {

// Bilinear factors at a single azimuth, |psi|^2 divided out.
TildeFactors bilinears_at(const Bispinor& b, double alpha) {
    const Complex i{0.0, 1.0};
    const Complex hm = std::exp(-i * alpha / 2.0);
    const Complex hp = std::exp(i * alpha / 2.0);
    const SpinorPair w{b.w.c1 * hm, b.w.c2 * hp};
    const SpinorPair v{b.v.c1 * hm, b.v.c2 * hp};

    auto flux = [&](Axis axis) {
        const SpinorPair sv = pauli(axis).apply(v);
        // Psi^+ gamma^0 gamma_i Psi = 2 Re(w^+ sigma_i v)
        return 2.0 * std::real(std::conj(w.c1) * sv.c1 + std::conj(w.c2) * sv.c2);
    };

    const double nu_x = flux(Axis::x);
    const double nu_y = flux(Axis::y);

    TildeFactors t;
    t.n_t = w.norm_sq() + v.norm_sq();
    t.nu_z = flux(Axis::z);
    t.nu_alpha = -nu_x * std::sin(alpha) + nu_y * std::cos(alpha);
    t.nu_r = nu_x * std::cos(alpha) + nu_y * std::sin(alpha);
    return t;
}

}  // namespace

TildeFactors tilde_from_bilinears(const StateParams& p) {
    const Bispinor b = make_bispinor(p);
    const TildeFactors ref = bilinears_at(b, 0.0);

    // Projected factors must not depend on where around the axis we look.
    for (int k = 1; k < 8; ++k) {
        const double alpha = 2.0 * std::numbers::pi * k / 8.0;
        const TildeFactors t = bilinears_at(b, alpha);
        const double spread = std::abs(t.n_t - ref.n_t) + std::abs(t.nu_z - ref.nu_z) +
                              std::abs(t.nu_alpha - ref.nu_alpha) +
                              std::abs(t.nu_r - ref.nu_r);
        if (spread > 1e-12)
            throw std::logic_error("tilde_from_bilinears: azimuth dependence detected");
    }
    return ref;
}

double normalization(const StateParams& p, double rho_max, double quadrature_tol) {
    if (!(rho_max * p.q_perp >= 20.0))
        throw std::domain_error("normalization: rho_max too small, need rho_max*q_perp >= 20, got " +
                                std::to_string(rho_max * p.q_perp));
    const double n_t = tilde_closed_form(p).n_t;
    auto integrand = [&](double rho) {
        if (rho <= 0.0) return 2.0 * p.q_perp;  // limit of the product at the axis
        return n_t * radial_psi_sq(p, rho) * 2.0 * std::numbers::pi * rho * p.ell_z;
    };
    const QuadratureResult q = integrate_adaptive(integrand, 0.0, rho_max, quadrature_tol);
    return q.value;
}

WidthDiagnostics width_diagnostics(const StateParams& p) {
    return {1.0 / (2.0 * p.q_perp), 1.0 / (std::sqrt(2.0) * p.q_perp), 1.0 / p.q_perp};
}

}  // namespace axial
