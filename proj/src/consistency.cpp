#include "axial/consistency.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "axial/observables.hpp"

namespace axial {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double wrap_phi(double phi) {
    double r = std::fmod(phi, two_pi);
    if (r < 0.0) r += two_pi;
    return r;
}

// Residuals of the two closure conditions at theta = pi/2.  Internal solver
// variables are s = sin(phi) and h = beta/2: the conditions depend on phi
// only through sin(phi), and the root sits at the extremum s = -1, which
// makes it a double root in phi itself.  In s the root is simple and Newton
// lands on the clamp boundary exactly.  h keeps the approach to the root
// on a log scale near threshold, where tanh(beta/2) -> 1.
struct R13 {
    double a;
    double b;
    double scale;  // magnitude of the constituent terms, for roundoff-aware stopping
};

R13 r13_residuals(double epsilon, double sp, double h) {
    const double k = std::sqrt(epsilon * epsilon - 1.0);
    const double ch = std::cosh(h);
    const double sh = std::sinh(h);
    const double q_z = k * ch;
    const double q_perp = k * sh;
    const double f2 = (epsilon - 1.0) / (epsilon + 1.0);
    const double f = std::sqrt(f2);

    const double nu_z = 2.0 * f * (ch - sh * sp);
    const double n_t = 1.0 + f2 * (ch * ch + sh * sh - 2.0 * ch * sh * sp);

    R13 r;
    r.a = epsilon * n_t - q_z * nu_z;
    r.b = n_t * n_t - q_perp * q_perp * nu_z * nu_z;
    r.scale = std::abs(epsilon * n_t) + std::abs(q_z * nu_z) + n_t * n_t +
              q_perp * q_perp * nu_z * nu_z;
    return r;
}

// The raw pair above degenerates as epsilon -> 1: both expressions collapse
// onto multiples of n - q_perp nu_z, and the Newton Jacobian loses rank.
// Iterate instead on the equivalent pair
//   c1 = n - q_perp nu_z,   c2 = epsilon q_perp - q_z,
// related by  a = epsilon c1 + nu_z c2  and  b = c1 (n + q_perp nu_z).
// No roots are lost: n >= 1 rules out the n = -q_perp nu_z branch of b.
struct Obj {
    double c1;
    double c2;
    double scale;
};

Obj objective(double epsilon, double sp, double h) {
    const double k = std::sqrt(epsilon * epsilon - 1.0);
    const double ch = std::cosh(h);
    const double sh = std::sinh(h);
    const double q_z = k * ch;
    const double q_perp = k * sh;
    const double f2 = (epsilon - 1.0) / (epsilon + 1.0);
    const double f = std::sqrt(f2);

    const double nu_z = 2.0 * f * (ch - sh * sp);
    const double n_t = 1.0 + f2 * (ch * ch + sh * sh - 2.0 * ch * sh * sp);

    Obj r;
    r.c1 = n_t - q_perp * nu_z;
    r.c2 = epsilon * q_perp - q_z;
    r.scale = n_t + q_perp * std::abs(nu_z) + epsilon * q_perp + q_z;
    return r;
}

double obj_norm(const Obj& r) { return std::hypot(r.c1, r.c2); }

struct NewtonResult {
    bool converged = false;
    double sp = 0.0;  // sin(phi)
    double h = 0.0;   // beta/2
    double residual = std::numeric_limits<double>::infinity();
};

constexpr double h_min = 1e-14;
constexpr double h_max = 25.0;

double stop_level(double tol, const Obj& r) {
    return std::max(tol, 50.0 * std::numeric_limits<double>::epsilon() * r.scale);
}

NewtonResult newton_2d(double epsilon, double sp0, double h0, double tol,
                       int max_iter = 100) {
    NewtonResult out;
    double sp = std::clamp(sp0, -1.0, 1.0);
    double h = std::clamp(h0, h_min, h_max);
    Obj r = objective(epsilon, sp, h);

    for (int iter = 0; iter < max_iter; ++iter) {
        if (obj_norm(r) <= stop_level(tol, r)) break;
        const double hs = 1e-7;
        const double hh = 1e-7 * std::max(1.0, h);
        const Obj rs1 = objective(epsilon, std::clamp(sp + hs, -1.0, 1.0), h);
        const Obj rs0 = objective(epsilon, std::clamp(sp - hs, -1.0, 1.0), h);
        const double ds_span = std::clamp(sp + hs, -1.0, 1.0) - std::clamp(sp - hs, -1.0, 1.0);
        const Obj rh1 = objective(epsilon, sp, std::clamp(h + hh, h_min, h_max));
        const Obj rh0 = objective(epsilon, sp, std::clamp(h - hh, h_min, h_max));
        const double dh_span = std::clamp(h + hh, h_min, h_max) - std::clamp(h - hh, h_min, h_max);
        const double j00 = (rs1.c1 - rs0.c1) / ds_span;
        const double j01 = (rh1.c1 - rh0.c1) / dh_span;
        const double j10 = (rs1.c2 - rs0.c2) / ds_span;
        const double j11 = (rh1.c2 - rh0.c2) / dh_span;
        const double det = j00 * j11 - j01 * j10;
        if (std::abs(det) < 1e-300) break;
        double dsp = -(j11 * r.c1 - j01 * r.c2) / det;
        double dh = -(-j10 * r.c1 + j00 * r.c2) / det;
        // per-component caps; rescaling the whole vector would let a clamped
        // sp component starve the h progress
        dsp = std::clamp(dsp, -2.0, 2.0);
        dh = std::clamp(dh, -2.0, 2.0);

        // backtracking damping on the residual norm
        double lambda = 1.0;
        bool stepped = false;
        for (int bt = 0; bt < 40; ++bt) {
            const double sp_try = std::clamp(sp + lambda * dsp, -1.0, 1.0);
            const double h_try = std::clamp(h + lambda * dh, h_min, h_max);
            const Obj r_try = objective(epsilon, sp_try, h_try);
            if (obj_norm(r_try) < obj_norm(r)) {
                sp = sp_try;
                h = h_try;
                r = r_try;
                stepped = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!stepped) break;
    }
    // asin amplifies the last few ulps of sp enormously near |sp| = 1, so snap
    // onto the boundary when the residual there is just as good
    for (double edge : {-1.0, 1.0}) {
        if (std::abs(sp - edge) > 1e-6 || sp == edge) continue;
        const Obj r_edge = objective(epsilon, edge, h);
        if (obj_norm(r_edge) <= stop_level(tol, r_edge)) {
            sp = edge;
            r = r_edge;
        }
    }
    out.converged = obj_norm(r) <= stop_level(tol, r);
    out.sp = sp;
    out.h = h;
    out.residual = obj_norm(r);
    return out;
}

// sin(phi) = sp has two branches; this one passes through phi = 3pi/2 at
// sp = -1, where every actual root lives.
double phi_from_sp(double sp) { return wrap_phi(std::numbers::pi - std::asin(sp)); }

}  // namespace

std::pair<Mat2, Mat2> eq11_matrices(const StateParams& p, double phi_val, double az_val) {
    const Complex i{0.0, 1.0};
    const double d1 = (p.epsilon + 1.0) * phi_val - p.q_z * az_val;
    const double d2 = (p.epsilon - 1.0) * phi_val - p.q_z * az_val;
    const Complex off = i * p.q_perp * az_val;

    Mat2 m1, m2;
    m1(0, 0) = d1;
    m1(0, 1) = -off;
    m1(1, 0) = off;
    m1(1, 1) = d1;
    m2(0, 0) = d2;
    m2(0, 1) = off;
    m2(1, 0) = -off;
    m2(1, 1) = d2;
    return {m1, m2};
}

ConditionResiduals condition_residuals(const StateParams& p) {
    const Complex i{0.0, 1.0};
    const TildeFactors t = tilde_closed_form(p);
    const SpinorPair w = spinor_w(p);

    ConditionResiduals r;
    r.r9 = std::cos(p.theta);
    r.r13a = p.epsilon * t.n_t - p.q_z * t.nu_z;
    r.r13b = t.n_t * t.n_t - p.q_perp * p.q_perp * t.nu_z * t.nu_z;
    r.r14a = std::abs(t.n_t * w.c1 - i * p.q_perp * t.nu_z * w.c2);
    r.r14b = std::abs(i * p.q_perp * t.nu_z * w.c1 + t.n_t * w.c2);
    return r;
}

ConsistencyReport solve_consistency(double epsilon, double solver_tol) {
    if (!(epsilon > 1.0)) throw std::domain_error("solve_consistency: epsilon must be > 1");
    if (!(solver_tol > 0.0)) throw std::domain_error("solve_consistency: solver_tol must be > 0");

    NewtonResult best;
    double best_start_phi = 0.0, best_start_beta = 0.0;
    bool found = false;
    NewtonResult root;

    for (int ib = 0; ib < 8 && !found; ++ib) {
        const double beta0 = 4.0 * (ib + 1) / 8.0;
        for (int ip = 0; ip < 8 && !found; ++ip) {
            const double phi0 = two_pi * (ip + 0.5) / 8.0;
            const NewtonResult nr =
                newton_2d(epsilon, std::sin(phi0), beta0 / 2.0, solver_tol);
            if (nr.converged) {
                root = nr;
                found = true;
            } else if (nr.residual < best.residual) {
                best = nr;
                best_start_phi = phi0;
                best_start_beta = beta0;
            }
        }
    }
    if (!found) {
        std::ostringstream msg;
        msg << "solve_consistency: no convergence at epsilon=" << epsilon
            << "; best residual " << best.residual << " from start (phi=" << best_start_phi
            << ", beta=" << best_start_beta << ")";
        throw std::runtime_error(msg.str());
    }

    const double phi_star = phi_from_sp(root.sp);
    const double beta_star = 2.0 * root.h;
    const StateParams p =
        make_state(epsilon, beta_star, std::numbers::pi / 2.0, phi_star, 1.0);
    const ConditionResiduals cr = condition_residuals(p);

    // the closure conditions should force the spinor equations to be solvable
    const double r14_scale = tilde_closed_form(p).n_t + p.q_perp * std::abs(tilde_closed_form(p).nu_z);
    if (cr.r14a > 1e-8 * r14_scale || cr.r14b > 1e-8 * r14_scale) {
        std::ostringstream msg;
        msg << "solve_consistency: spinor-equation residuals do not vanish at the root (phi="
            << phi_star << ", beta=" << beta_star << ", r13 norm=" << root.residual
            << ", r14=" << cr.r14a << "," << cr.r14b << ")";
        throw std::logic_error(msg.str());
    }

    ConsistencyReport rep;
    rep.theta_star = std::numbers::pi / 2.0;
    rep.phi_star = phi_star;
    rep.beta_star = beta_star;
    rep.q_perp_star = p.q_perp;
    rep.residual_norm = std::hypot(cr.r13a, cr.r13b);
    rep.condition_residuals = cr;

    const double match_tol = 1e-9;
    rep.matched_closed_form =
        std::abs(rep.theta_star - std::numbers::pi / 2.0) <= match_tol &&
        std::abs(rep.phi_star - 3.0 * std::numbers::pi / 2.0) <= match_tol &&
        std::abs(std::tanh(rep.beta_star / 2.0) - 1.0 / epsilon) <= match_tol;
    return rep;
}

std::vector<Basin> uniqueness_scan(double epsilon, int n_phi, int n_beta, double beta_max,
                                   double threshold, bool parallel) {
    if (!(epsilon > 1.0)) throw std::domain_error("uniqueness_scan: epsilon must be > 1");
    if (n_phi < 64 || n_beta < 64)
        throw std::domain_error("uniqueness_scan: grid must be at least 64x64");

    std::vector<double> F(static_cast<std::size_t>(n_phi) * n_beta);
    auto eval_row = [&](int ib) {
        const double beta = beta_max * (ib + 1) / n_beta;
        for (int ip = 0; ip < n_phi; ++ip) {
            const double phi = two_pi * ip / n_phi;
            const R13 r = r13_residuals(epsilon, std::sin(phi), beta / 2.0);
            F[static_cast<std::size_t>(ib) * n_phi + ip] = r.a * r.a + r.b * r.b;
        }
    };

    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int ib = 0; ib < n_beta; ++ib) eval_row(ib);
    } else {
        for (int ib = 0; ib < n_beta; ++ib) eval_row(ib);
    }

    const double f_max = *std::max_element(F.begin(), F.end());
    const double cut = threshold * f_max;

    std::vector<Basin> basins;
    for (int ib = 0; ib < n_beta; ++ib) {
        for (int ip = 0; ip < n_phi; ++ip) {
            const double f0 = F[static_cast<std::size_t>(ib) * n_phi + ip];
            if (!(f0 < cut)) continue;
            // local minimum over the 4-neighborhood (phi wraps, beta clamps)
            auto at = [&](int jb, int jp) {
                jp = (jp % n_phi + n_phi) % n_phi;
                jb = std::clamp(jb, 0, n_beta - 1);
                return F[static_cast<std::size_t>(jb) * n_phi + jp];
            };
            if (f0 > at(ib, ip - 1) || f0 > at(ib, ip + 1) || f0 > at(ib - 1, ip) ||
                f0 > at(ib + 1, ip))
                continue;

            const double beta = beta_max * (ib + 1) / n_beta;
            const double phi = two_pi * ip / n_phi;
            const NewtonResult nr = newton_2d(epsilon, std::sin(phi), beta / 2.0, 1e-12);
            if (!nr.converged) continue;

            const double phi_star = phi_from_sp(nr.sp);
            const double beta_star = 2.0 * nr.h;
            const R13 polished = r13_residuals(epsilon, nr.sp, nr.h);
            bool duplicate = false;
            for (const Basin& b : basins) {
                double dphi = std::abs(b.phi - phi_star);
                dphi = std::min(dphi, two_pi - dphi);
                if (dphi < 1e-6 && std::abs(b.beta - beta_star) < 1e-6) {
                    duplicate = true;
                    break;
                }
            }
            if (!duplicate)
                basins.push_back({phi_star, beta_star, std::hypot(polished.a, polished.b)});
        }
    }
    return basins;
}

}  // namespace axial
