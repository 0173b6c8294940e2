#include "axial/state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "axial/observables.hpp"

namespace axial {

namespace {

void check_positive_rho(double rho) {
    if (!(rho > 0.0)) throw std::domain_error("rho must be > 0, got " + std::to_string(rho));
}

}  // namespace

StateParams make_state(double epsilon, double beta, double theta, double phi,
                       double ell_z) {
    if (!(epsilon > 1.0))
        throw std::domain_error("epsilon must be > 1, got " + std::to_string(epsilon));
    if (!(beta > 0.0))
        throw std::domain_error("beta must be > 0, got " + std::to_string(beta));
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
        throw std::domain_error("theta must lie in [0, pi], got " + std::to_string(theta));
    if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi))
        throw std::domain_error("phi must lie in [0, 2pi), got " + std::to_string(phi));
    if (!(ell_z > 0.0))
        throw std::domain_error("ell_z must be > 0, got " + std::to_string(ell_z));

    StateParams p{epsilon, beta, theta, phi, ell_z, 0.0, 0.0};
    const double k = std::sqrt(epsilon * epsilon - 1.0);
    p.q_z = k * std::cosh(beta / 2.0);
    p.q_perp = k * std::sinh(beta / 2.0);
    return p;
}

StateParams self_consistent_state(double epsilon, double ell_z) {
    if (!(epsilon > 1.0))
        throw std::domain_error("epsilon must be > 1, got " + std::to_string(epsilon));
    const double beta = 2.0 * std::atanh(1.0 / epsilon);
    return make_state(epsilon, beta, std::numbers::pi / 2.0, 3.0 * std::numbers::pi / 2.0,
                      ell_z);
}

SpinorPair spinor_w(const StateParams& p) {
    const Complex i{0.0, 1.0};
    return {std::cos(p.theta / 2.0),
            std::sin(p.theta / 2.0) * std::exp(i * p.phi)};
}

SpinorPair spinor_v(const StateParams& p, const SpinorPair& w) {
    const Complex i{0.0, 1.0};
    const double pref = std::sqrt((p.epsilon - 1.0) / (p.epsilon + 1.0));
    const double ch = std::cosh(p.beta / 2.0);
    const double sh = std::sinh(p.beta / 2.0);
    Mat2 m;
    m(0, 0) = ch;
    m(0, 1) = i * sh;
    m(1, 0) = i * sh;
    m(1, 1) = -ch;
    return pref * m.apply(w);
}

Bispinor make_bispinor(const StateParams& p) {
    const SpinorPair w = spinor_w(p);
    return {w, spinor_v(p, w)};
}

double radial_psi_sq(const StateParams& p, double rho) {
    check_positive_rho(rho);
    const double n_t = tilde_closed_form(p).n_t;
    return (2.0 / n_t) * (p.q_perp / (2.0 * std::numbers::pi * p.ell_z)) *
           std::exp(-2.0 * rho * p.q_perp) / rho;
}

double radial_psi(const StateParams& p, double rho) {
    return std::sqrt(radial_psi_sq(p, rho));
}

std::array<Complex, 4> eval_bispinor(const StateParams& p, const CylPoint& pt) {
    check_positive_rho(pt.rho);
    const Complex i{0.0, 1.0};
    const Bispinor b = make_bispinor(p);
    const double psi = radial_psi(p, pt.rho);
    const Complex plane = std::exp(i * (p.q_z * pt.z - p.epsilon * pt.t));
    const Complex half_m = std::exp(-i * pt.alpha / 2.0);
    const Complex half_p = std::exp(i * pt.alpha / 2.0);
    return {b.w.c1 * half_m * psi * plane, b.w.c2 * half_p * psi * plane,
            b.v.c1 * half_m * psi * plane, b.v.c2 * half_p * psi * plane};
}

}  // namespace axial
