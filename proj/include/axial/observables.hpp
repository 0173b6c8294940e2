#ifndef AXIAL_OBSERVABLES_HPP
#define AXIAL_OBSERVABLES_HPP

#include "axial/state.hpp"

namespace axial {

// rho-independent prefactors of the particle and flux densities after
// factoring |psi(rho)|^2 out of the bilinears.
struct TildeFactors {
    double n_t;       // particle density factor, > 0
    double nu_z;      // longitudinal flux factor
    double nu_alpha;  // azimuthal flux factor
    double nu_r;      // radial flux factor, identically 0
};

// Closed-form evaluation:
//   nu_z     = 2 sqrt((e-1)/(e+1)) (cosh(b/2) - sinh(b/2) sin(theta) sin(phi))
//   nu_alpha = 2 sqrt((e-1)/(e+1)) sinh(b/2) cos(theta)
//   nu_r     = 0
//   n_t      = 1 + ((e-1)/(e+1)) (cosh b - sinh b sin(theta) sin(phi))
TildeFactors tilde_closed_form(const StateParams& p);

// Independent evaluation from the bispinor bilinears n = Psi^+ Psi and
// nu = Psi^+ gamma^0 gamma Psi, with the transverse components projected onto
// the cylindrical unit vectors.  Sampled at 8 azimuths; the alpha-independence
// of the projected result is asserted internally.
TildeFactors tilde_from_bilinears(const StateParams& p);

// One-particle normalization integral
//   int_0^rho_max n_t * radial_psi_sq(rho) * 2 pi rho drho * ell_z
// by adaptive quadrature.  Requires rho_max * q_perp >= 20 so the
// exp(-2 q_perp rho_max) tail stays inside the error budget.
double normalization(const StateParams& p, double rho_max, double quadrature_tol);

struct WidthDiagnostics {
    double mean_rho;  // 1 / (2 q_perp)
    double rms_rho;   // 1 / (sqrt(2) q_perp)
    double efold;     // 1 / q_perp, the transverse localization width
};

// Moments of the radial probability density p(rho) = 2 q_perp exp(-2 q_perp rho).
WidthDiagnostics width_diagnostics(const StateParams& p);

}  // namespace axial

#endif
