#include "axial/fields.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "axial/expint.hpp"
#include "axial/quadrature.hpp"

namespace axial {

double potential_integral_quadrature(double q_perp, double rho, double tol) {
    if (!(q_perp > 0.0)) throw std::domain_error("potential_integral_quadrature: q_perp must be > 0");
    if (!(rho >= 0.0)) throw std::domain_error("potential_integral_quadrature: rho must be >= 0");
    if (rho == 0.0) return 0.0;
    auto integrand = [q_perp](double x) {
        // integrand -> 2 q_perp as x -> 0
        if (x < 1e-12 / q_perp) return 2.0 * q_perp * (1.0 - q_perp * x);
        return (1.0 - std::exp(-2.0 * q_perp * x)) / x;
    };
    return integrate_adaptive(integrand, 0.0, rho, tol).value;
}

double potential_integral_special(double q_perp, double rho) {
    if (!(q_perp > 0.0)) throw std::domain_error("potential_integral_special: q_perp must be > 0");
    if (!(rho > 0.0)) throw std::domain_error("potential_integral_special: rho must be > 0");
    const double z = 2.0 * q_perp * rho;
    return std::numbers::egamma + std::log(z) + expint_e1(z);
}

double FieldPotentials::radial_factor(double rho) const {
    if (rho == 0.0) return 0.0;
    return potential_integral_special(q_perp, rho);
}

FieldPotentials make_potentials(const StateParams& p, const Couplings& c,
                                const TildeFactors& t) {
    if (!(c.alpha_f >= 0.0) || !(c.ell_z > 0.0))
        throw std::domain_error("make_potentials: couplings must be positive");
    const double scale = -c.alpha_f / c.ell_z;
    return {scale * t.n_t, scale * t.nu_z, p.q_perp};
}

std::pair<RadialProfile, RadialProfile> ode_residual(const StateParams& p,
                                                     const Couplings& c,
                                                     const TildeFactors& t,
                                                     const std::vector<double>& rho_grid) {
    const std::size_t n = rho_grid.size();
    if (n < 5) throw std::invalid_argument("ode_residual: need at least 5 grid points");
    if (!(rho_grid.front() > 0.0)) throw std::invalid_argument("ode_residual: grid must start > 0");
    const double h = rho_grid[1] - rho_grid[0];
    for (std::size_t i = 1; i < n; ++i) {
        const double step = rho_grid[i] - rho_grid[i - 1];
        if (!(step > 0.0) || std::abs(step - h) > 1e-9 * h)
            throw std::invalid_argument("ode_residual: grid must be uniform and increasing");
    }

    const FieldPotentials pot = make_potentials(p, c, t);
    std::vector<double> phi(n), az(n);
    for (std::size_t i = 0; i < n; ++i) {
        phi[i] = pot.phi(rho_grid[i]);
        az[i] = pot.a_z(rho_grid[i]);
    }

    RadialProfile res_phi, res_az;
    res_phi.rho.reserve(n - 2);
    res_phi.values.reserve(n - 2);
    res_az.rho.reserve(n - 2);
    res_az.values.reserve(n - 2);

    const double src_scale = 2.0 * c.alpha_f * p.q_perp / c.ell_z;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double rho = rho_grid[i];
        const double source = src_scale * std::exp(-2.0 * p.q_perp * rho) / rho;
        const double d2phi = (phi[i + 1] - 2.0 * phi[i] + phi[i - 1]) / (h * h);
        const double d1phi = (phi[i + 1] - phi[i - 1]) / (2.0 * h);
        const double d2az = (az[i + 1] - 2.0 * az[i] + az[i - 1]) / (h * h);
        const double d1az = (az[i + 1] - az[i - 1]) / (2.0 * h);
        res_phi.rho.push_back(rho);
        res_phi.values.push_back(d2phi + d1phi / rho + t.n_t * source);
        res_az.rho.push_back(rho);
        res_az.values.push_back(d2az + d1az / rho + t.nu_z * source);
    }
    return {res_phi, res_az};
}

}  // namespace axial
