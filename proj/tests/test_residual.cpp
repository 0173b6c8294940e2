#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "axial/fields.hpp"
#include "axial/residual.hpp"

using namespace axial;

namespace {

constexpr double pi = std::numbers::pi;

StateParams random_state(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return make_state(1.05 + 9.0 * u(rng), 0.1 + 2.9 * u(rng), pi * u(rng),
                      2.0 * pi * u(rng) * (1.0 - 1e-12));
}

GridSpec grid_for(const StateParams& p) {
    GridSpec g;
    g.rho_max = 20.0 / p.q_perp;
    return g;
}

}  // namespace

TEST_CASE("free residual vanishes in analytic mode for random states") {
    std::mt19937 rng(21u);
    for (int k = 0; k < 100; ++k) {
        const StateParams p = random_state(rng);
        CHECK(free_dirac_residual(p, grid_for(p)).rel_norm <= 1e-12);
    }
}

TEST_CASE("free residual in finite-difference mode converges at order 2") {
    const StateParams p = self_consistent_state(2.0);
    GridSpec g1 = grid_for(p);
    g1.derivative_mode = DerivativeMode::central_fd;
    // keep the stencil width small against rho itself, otherwise the 1/sqrt(rho)
    // region near the axis is under-resolved and masks the h^2 scaling
    g1.rho_min = 0.5;
    g1.points = 1024;
    GridSpec g2 = g1;
    g2.points = 2047;  // h -> h/2 on the same interval
    const double r1 = free_dirac_residual(p, g1).rel_norm;
    const double r2 = free_dirac_residual(p, g2).rel_norm;
    CHECK(r1 / r2 >= 3.5);
    CHECK(r1 / r2 <= 4.5);
}

TEST_CASE("perturbing the lower pair is detected") {
    const StateParams p = self_consistent_state(2.0);
    CHECK(free_dirac_residual(p, grid_for(p), 0.0, 1.01).rel_norm >= 1e-3);
}

TEST_CASE("residual magnitude profile is azimuth-independent") {
    const StateParams p = make_state(2.0, 1.0, 1.0, 2.0);
    GridSpec g = grid_for(p);
    g.derivative_mode = DerivativeMode::central_fd;
    g.points = 256;
    const ResidualResult ref = free_dirac_residual(p, g, 0.0);
    for (double alpha : {0.9, 2.2, 4.7, 6.1}) {
        const ResidualResult r = free_dirac_residual(p, g, alpha);
        CHECK(r.rel_norm == doctest::Approx(ref.rel_norm).epsilon(1e-12));
        for (std::size_t k = 0; k < ref.profile.values.size(); k += 17)
            CHECK(r.profile.values[k] ==
                  doctest::Approx(ref.profile.values[k]).epsilon(1e-12));
    }
}

TEST_CASE("interacting residual vanishes on the self-consistent manifold") {
    for (double e : {1.1, 2.0, 5.0, 10.0}) {
        const StateParams p = self_consistent_state(e);
        CHECK(interacting_dirac_residual(p, Couplings::test(), grid_for(p)).rel_norm <=
              1e-12);
    }
}

TEST_CASE("interacting residual flags the wrong-phi branch") {
    const StateParams sc = self_consistent_state(2.0);
    const StateParams wrong = make_state(2.0, sc.beta, pi / 2.0, pi / 2.0);
    const double r = interacting_dirac_residual(wrong, Couplings::test(), grid_for(wrong)).rel_norm;
    CHECK(r > 0.01);
}

TEST_CASE("wrong-branch residual scales linearly with alpha_f") {
    const StateParams sc = self_consistent_state(2.0);
    const StateParams wrong = make_state(2.0, sc.beta, pi / 2.0, pi / 2.0);
    const GridSpec g = grid_for(wrong);
    const double r1 = interacting_dirac_residual(wrong, Couplings{1.0, 1.0}, g).rel_norm;
    const double rhalf =
        interacting_dirac_residual(wrong, Couplings{0.5, 1.0}, g).rel_norm;
    CHECK(r1 / rhalf == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("grid validation") {
    const StateParams p = self_consistent_state(2.0);
    CHECK_THROWS_AS(free_dirac_residual(p, GridSpec{0.0, 10.0, 64}), std::invalid_argument);
    CHECK_THROWS_AS(free_dirac_residual(p, GridSpec{1.0, 0.5, 64}), std::invalid_argument);
    CHECK_THROWS_AS(free_dirac_residual(p, GridSpec{1e-3, 10.0, 8}), std::invalid_argument);
}

TEST_CASE("parallel kernel agrees with the serial reference") {
    const StateParams p = self_consistent_state(2.0);
    GridSpec g = grid_for(p);
    g.derivative_mode = DerivativeMode::central_fd;

    const ResidualResult par = free_dirac_residual(p, g, 0.3, 1.0, true);
    const ResidualResult ser = serial::free_dirac_residual(p, g, 0.3, 1.0);
    CHECK(par.rel_norm == ser.rel_norm);
    for (std::size_t k = 0; k < par.profile.values.size(); ++k)
        CHECK(par.profile.values[k] == ser.profile.values[k]);

    const ResidualResult ipar = interacting_dirac_residual(p, Couplings::test(), g, 0.0, true);
    const ResidualResult iser = serial::interacting_dirac_residual(p, Couplings::test(), g);
    CHECK(ipar.rel_norm == iser.rel_norm);
}
