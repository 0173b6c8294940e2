#ifndef AXIAL_STATE_HPP
#define AXIAL_STATE_HPP

#include <array>
#include <vector>

#include "axial/algebra.hpp"

namespace axial {

// Parameters of the semi-localized axial ansatz.  beta is the primary
// localization parameter; the wavenumbers q_z, q_perp are derived:
//   q_z = sqrt(eps^2-1) cosh(beta/2),  q_perp = sqrt(eps^2-1) sinh(beta/2),
// which satisfy eps^2 - 1 = q_z^2 - q_perp^2 identically.
struct StateParams {
    double epsilon;  // rescaled energy E/mc^2, > 1
    double beta;     // localization parameter, > 0
    double theta;    // spinor polar angle in [0, pi]
    double phi;      // spinor azimuth in [0, 2pi)
    double ell_z;    // quantization length in Compton units, > 0
    double q_z;      // derived longitudinal wavenumber
    double q_perp;   // derived transverse (evanescent) wavenumber
};

// Cylindrical evaluation point in Compton units; rho strictly positive
// (the radial profile has a 1/sqrt(rho) singularity on the axis).
struct CylPoint {
    double rho;
    double alpha;
    double z;
    double t;
};

struct Bispinor {
    SpinorPair w;
    SpinorPair v;
};

// Sampled radial function on a strictly increasing positive grid.
struct RadialProfile {
    std::vector<double> rho;
    std::vector<double> values;
};

// Validates parameters and caches the derived wavenumbers.
// Throws std::domain_error naming the violated bound.
StateParams make_state(double epsilon, double beta, double theta, double phi,
                       double ell_z = 1.0);

// The self-consistent parameter point for a given energy:
// theta = pi/2, phi = 3pi/2, tanh(beta/2) = 1/epsilon.
StateParams self_consistent_state(double epsilon, double ell_z = 1.0);

// Upper pair w = (cos(theta/2), sin(theta/2) e^{i phi}); unit norm.
SpinorPair spinor_w(const StateParams& p);

// Lower pair v = sqrt((eps-1)/(eps+1)) [[cosh(b/2), i sinh(b/2)],
//                                       [i sinh(b/2), -cosh(b/2)]] w.
SpinorPair spinor_v(const StateParams& p, const SpinorPair& w);

Bispinor make_bispinor(const StateParams& p);

// Normalized radial density |psi(rho)|^2 in Compton units:
//   (2/n_tilde) * (q_perp / (2 pi ell_z)) * exp(-2 rho q_perp) / rho.
// The 2/n_tilde factor makes the one-particle normalization integral equal 1
// for every parameter set; at the self-consistent point (n_tilde = 2) it is 1.
double radial_psi_sq(const StateParams& p, double rho);

// Positive square root of radial_psi_sq.
double radial_psi(const StateParams& p, double rho);

// Full bispinor amplitudes at a cylindrical point:
//   (w1 e^{-ia/2}, w2 e^{ia/2}, v1 e^{-ia/2}, v2 e^{ia/2})
//     * psi(rho) * exp(i (q_z z - eps t)).
std::array<Complex, 4> eval_bispinor(const StateParams& p, const CylPoint& pt);

}  // namespace axial

#endif
