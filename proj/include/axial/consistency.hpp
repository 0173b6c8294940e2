#ifndef AXIAL_CONSISTENCY_HPP
#define AXIAL_CONSISTENCY_HPP

#include <utility>
#include <vector>

#include "axial/algebra.hpp"
#include "axial/state.hpp"

namespace axial {

// Labeled residuals of the self-consistency conditions, evaluated on the
// rho-independent prefactor forms (the common -alpha_f I(rho)/ell_z factor
// divided out; the conditions are homogeneous in the potentials):
//   r9   = cos(theta)
//   r13a = eps * n_tilde - q_z * nu_z
//   r13b = n_tilde^2 - q_perp^2 * nu_z^2
//   r14a = |n_tilde w1 - i q_perp nu_z w2|
//   r14b = |i q_perp nu_z w1 + n_tilde w2|
struct ConditionResiduals {
    double r9;
    double r13a;
    double r13b;
    double r14a;
    double r14b;
};

struct ConsistencyReport {
    double theta_star;
    double phi_star;
    double beta_star;
    double q_perp_star;
    double residual_norm;
    bool matched_closed_form;
    ConditionResiduals condition_residuals;
};

struct Basin {
    double phi;
    double beta;
    double residual;  // sqrt(r13a^2 + r13b^2) after polishing
};

// The two homogeneous 2x2 systems obtained after eliminating the free-state
// part, with (phi_val, az_val) the pointwise potential values.
std::pair<Mat2, Mat2> eq11_matrices(const StateParams& p, double phi_val, double az_val);

ConditionResiduals condition_residuals(const StateParams& p);

// Fixes theta = pi/2 (the unique zero of cos(theta) on [0, pi]), then solves
// r13a = 0, r13b = 0 for (phi, beta) by damped Newton from a deterministic
// 8x8 multi-start grid over phi in [0, 2pi) x beta in (0, 4].  Asserts
// post-hoc that r14a, r14b also vanish at the root.
ConsistencyReport solve_consistency(double epsilon, double solver_tol = 1e-12);

// Evaluates r13a^2 + r13b^2 on an n_phi x n_beta grid, polishes every local
// minimum below threshold * (grid maximum), and clusters the converged roots
// modulo 2pi in phi.
std::vector<Basin> uniqueness_scan(double epsilon, int n_phi, int n_beta,
                                   double beta_max = 5.0, double threshold = 1e-4,
                                   bool parallel = true);

}  // namespace axial

#endif
