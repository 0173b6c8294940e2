#ifndef AXIAL_FIELDS_HPP
#define AXIAL_FIELDS_HPP

#include <utility>
#include <vector>

#include "axial/observables.hpp"
#include "axial/state.hpp"

namespace axial {

struct Couplings {
    double alpha_f;  // fine-structure constant, > 0
    double ell_z;    // quantization length in Compton units, > 0

    // CODATA fine-structure constant.
    static Couplings physics(double ell_z = 1.0) { return {7.2973525693e-3, ell_z}; }
    // O(1) coupling so field effects sit well above rounding noise.
    static Couplings test() { return {1.0, 1.0}; }
};

// Common radial integral I(rho) = int_0^rho (1 - exp(-2 q_perp x)) / x dx,
// by adaptive quadrature.  I(0) = 0, monotone increasing.
double potential_integral_quadrature(double q_perp, double rho, double tol);

// Same integral in closed form: gamma_E + ln(2 q_perp rho) + E1(2 q_perp rho).
double potential_integral_special(double q_perp, double rho);

// Self-generated potentials sharing the radial factor I(rho):
//   phi(rho) = -(alpha_f / ell_z) n_tilde  I(rho)
//   a_z(rho) = -(alpha_f / ell_z) nu_z     I(rho)
// Gauge phi(0) = 0; the logarithmic growth at large rho is the line-source
// behavior and is left as is.
struct FieldPotentials {
    double pref_phi;  // -(alpha_f/ell_z) n_tilde
    double pref_az;   // -(alpha_f/ell_z) nu_z
    double q_perp;

    double radial_factor(double rho) const;
    double phi(double rho) const { return pref_phi * radial_factor(rho); }
    double a_z(double rho) const { return pref_az * radial_factor(rho); }
};

FieldPotentials make_potentials(const StateParams& p, const Couplings& c,
                                const TildeFactors& t);

// Central-difference residuals of the radial source ODEs
//   phi'' + phi'/rho + S_phi = 0,   a_z'' + a_z'/rho + S_a = 0,
// with S_phi = (2 alpha_f n_tilde q_perp / ell_z) exp(-2 q_perp rho)/rho and
// S_a the same with nu_z.  Evaluated on the interior of a uniform grid;
// max |residual| = O(h^2) on the closed-form potentials.
std::pair<RadialProfile, RadialProfile> ode_residual(const StateParams& p,
                                                     const Couplings& c,
                                                     const TildeFactors& t,
                                                     const std::vector<double>& rho_grid);

}  // namespace axial

#endif
