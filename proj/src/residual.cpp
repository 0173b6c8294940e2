#include "axial/residual.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace axial {

namespace {

void validate_grid(const GridSpec& g) {
    if (!(g.rho_min > 0.0)) throw std::invalid_argument("grid: rho_min must be > 0");
    if (!(g.rho_max > g.rho_min)) throw std::invalid_argument("grid: rho_max must exceed rho_min");
    if (g.points < 16) throw std::invalid_argument("grid: need at least 16 points");
}

struct Terms {
    double res_sq;   // rho-weighted accumuland for ||R||^2 (weight applied later)
    double psi_sq;   // same for ||Psi||^2
    double profile;  // pointwise |R|
};

// Kahan summation keeps the norms deterministic and independent of the
// evaluation order of the grid loop.
double kahan_sum(const std::vector<double>& xs) {
    double sum = 0.0, comp = 0.0;
    for (double x : xs) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

ResidualResult residual_impl(const StateParams& p, const FieldPotentials* pot,
                             const GridSpec& grid, double alpha, double v_scale,
                             bool parallel) {
    validate_grid(grid);
    const int n = grid.points;
    const double h = (grid.rho_max - grid.rho_min) / (n - 1);
    const Bispinor bs = make_bispinor(p);
    const Complex i{0.0, 1.0};
    const Complex hm = std::exp(-i * alpha / 2.0);
    const Complex hp = std::exp(i * alpha / 2.0);

    std::vector<double> rho(n), psi(n), dpsi(n);
    for (int k = 0; k < n; ++k) rho[k] = grid.rho_min + h * k;

    auto fill_psi = [&](int k) { psi[k] = radial_psi(p, rho[k]); };
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int k = 0; k < n; ++k) fill_psi(k);
    } else {
        for (int k = 0; k < n; ++k) fill_psi(k);
    }

    if (grid.derivative_mode == DerivativeMode::analytic) {
        for (int k = 0; k < n; ++k)
            dpsi[k] = -(p.q_perp + 0.5 / rho[k]) * psi[k];
    } else {
        dpsi[0] = (-3.0 * psi[0] + 4.0 * psi[1] - psi[2]) / (2.0 * h);
        for (int k = 1; k + 1 < n; ++k) dpsi[k] = (psi[k + 1] - psi[k - 1]) / (2.0 * h);
        dpsi[n - 1] = (3.0 * psi[n - 1] - 4.0 * psi[n - 2] + psi[n - 3]) / (2.0 * h);
    }

    std::vector<double> res_terms(n), psi_terms(n), prof(n);
    auto point = [&](int k) {
        const double r = rho[k];
        const double f = psi[k];
        const double df = dpsi[k];

        // radial amplitudes of the four components
        const Complex a1 = f * bs.w.c1;
        const Complex a2 = f * bs.w.c2;
        const Complex b1 = v_scale * f * bs.v.c1;
        const Complex b2 = v_scale * f * bs.v.c2;
        const Complex da1 = df * bs.w.c1;
        const Complex da2 = df * bs.w.c2;
        const Complex db1 = v_scale * df * bs.v.c1;
        const Complex db2 = v_scale * df * bs.v.c2;

        // sigma.q on a half-phased block (f1 e^{-ia/2}, f2 e^{ia/2}):
        //   g1 = q_z f1 - i (f2' + f2/(2 rho))
        //   g2 = -q_z f2 - i (f1' + f1/(2 rho))
        auto sigma_q = [&](Complex f1, Complex f2, Complex df1, Complex df2) {
            return SpinorPair{p.q_z * f1 - i * (df2 + f2 / (2.0 * r)),
                              -p.q_z * f2 - i * (df1 + f1 / (2.0 * r))};
        };
        const SpinorPair sqa = sigma_q(a1, a2, da1, da2);
        const SpinorPair sqb = sigma_q(b1, b2, db1, db2);

        double phi_r = 0.0, az_r = 0.0;
        if (pot != nullptr) {
            phi_r = pot->phi(r);
            az_r = pot->a_z(r);
        }

        // R_upper = (eps - phi - 1) a - (sigma.q - a_z sigma_z) b
        // R_lower = (sigma.q - a_z sigma_z) a - (eps - phi + 1) b
        const Complex r1 = (p.epsilon - phi_r - 1.0) * a1 - (sqb.c1 - az_r * b1);
        const Complex r2 = (p.epsilon - phi_r - 1.0) * a2 - (sqb.c2 + az_r * b2);
        const Complex r3 = (sqa.c1 - az_r * a1) - (p.epsilon - phi_r + 1.0) * b1;
        const Complex r4 = (sqa.c2 + az_r * a2) - (p.epsilon - phi_r + 1.0) * b2;

        // attach the unimodular azimuthal phases (magnitude-preserving)
        const double rsq = std::norm(r1 * hm) + std::norm(r2 * hp) + std::norm(r3 * hm) +
                           std::norm(r4 * hp);
        const double psq = std::norm(a1) + std::norm(a2) + std::norm(b1) + std::norm(b2);
        const double weight = (k == 0 || k == n - 1) ? 0.5 * h : h;
        res_terms[k] = weight * r * rsq;
        psi_terms[k] = weight * r * psq;
        prof[k] = std::sqrt(rsq);
    };

    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int k = 0; k < n; ++k) point(k);
    } else {
        for (int k = 0; k < n; ++k) point(k);
    }

    ResidualResult out;
    out.rel_norm = std::sqrt(kahan_sum(res_terms) / kahan_sum(psi_terms));
    out.profile.rho = std::move(rho);
    out.profile.values = std::move(prof);
    return out;
}

}  // namespace

ResidualResult free_dirac_residual(const StateParams& p, const GridSpec& grid, double alpha,
                                   double v_scale, bool parallel) {
    return residual_impl(p, nullptr, grid, alpha, v_scale, parallel);
}

ResidualResult interacting_dirac_residual(const StateParams& p, const Couplings& c,
                                          const GridSpec& grid, double alpha,
                                          bool parallel) {
    const FieldPotentials pot = make_potentials(p, c, tilde_closed_form(p));
    return residual_impl(p, &pot, grid, alpha, 1.0, parallel);
}

namespace serial {

ResidualResult free_dirac_residual(const StateParams& p, const GridSpec& grid, double alpha,
                                   double v_scale) {
    return residual_impl(p, nullptr, grid, alpha, v_scale, false);
}

ResidualResult interacting_dirac_residual(const StateParams& p, const Couplings& c,
                                          const GridSpec& grid, double alpha) {
    const FieldPotentials pot = make_potentials(p, c, tilde_closed_form(p));
    return residual_impl(p, &pot, grid, alpha, 1.0, false);
}

}  // namespace serial

}  // namespace axial
