#ifndef AXIAL_RESIDUAL_HPP
#define AXIAL_RESIDUAL_HPP

#include "axial/fields.hpp"
#include "axial/state.hpp"

namespace axial {

enum class DerivativeMode { analytic, central_fd };

struct GridSpec {
    double rho_min = 1e-3;
    double rho_max = 20.0;
    int points = 2048;
    DerivativeMode derivative_mode = DerivativeMode::analytic;
};

struct ResidualResult {
    double rel_norm;        // ||R||_2 / ||Psi||_2, trapezoidal rho-weighted
    RadialProfile profile;  // pointwise |R(rho)| over the four components
};

// Residual of the free Dirac operator applied to the ansatz:
//   R(rho) = (eps gamma^0 - q.gamma - I) Psi
// with the z, t, alpha dependence applied analytically (the azimuthal
// derivative acts as -i/2 and +i/2 on the half-integer phases) and the radial
// derivative per derivative_mode.  v_scale perturbs the lower pair; 1 is the
// exact state.
ResidualResult free_dirac_residual(const StateParams& p, const GridSpec& grid,
                                   double alpha = 0.0, double v_scale = 1.0,
                                   bool parallel = true);

// Residual of the interacting operator with the state's own potentials:
//   R(rho) = ((eps - phi(rho)) gamma^0 - (q - a_z(rho) zhat).gamma - I) Psi.
ResidualResult interacting_dirac_residual(const StateParams& p, const Couplings& c,
                                          const GridSpec& grid, double alpha = 0.0,
                                          bool parallel = true);

namespace serial {
// Plain-loop reference implementations; byte-for-byte the same per-point math.
ResidualResult free_dirac_residual(const StateParams& p, const GridSpec& grid,
                                   double alpha = 0.0, double v_scale = 1.0);
ResidualResult interacting_dirac_residual(const StateParams& p, const Couplings& c,
                                          const GridSpec& grid, double alpha = 0.0);
}  // namespace serial

}  // namespace axial

#endif
