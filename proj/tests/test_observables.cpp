#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "axial/observables.hpp"
#include "axial/quadrature.hpp"

using namespace axial;

namespace {

constexpr double pi = std::numbers::pi;

StateParams random_state(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return make_state(1.05 + 9.0 * u(rng), 0.1 + 2.9 * u(rng), pi * u(rng),
                      2.0 * pi * u(rng) * (1.0 - 1e-12));
}

}  // namespace

TEST_CASE("closed-form factors at the self-consistent epsilon=2 point") {
    const TildeFactors t = tilde_closed_form(self_consistent_state(2.0));
    CHECK(t.n_t == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(t.nu_z == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(std::abs(t.nu_alpha) <= 1e-14);
    CHECK(t.nu_r == 0.0);
}

TEST_CASE("closed-form factors, generic free state (frozen regression values)") {
    // epsilon=2, beta=1, theta=pi/2, phi=0
    const TildeFactors t = tilde_closed_form(make_state(2.0, 1.0, pi / 2.0, 0.0));
    CHECK(t.n_t == doctest::Approx(1.51436021160508126).epsilon(1e-14));
    CHECK(t.nu_z == doctest::Approx(1.30207030911423105).epsilon(1e-14));
    CHECK(std::abs(t.nu_alpha) <= 1e-15);
}

TEST_CASE("theta=0 gives a nonzero azimuthal factor") {
    const TildeFactors t = tilde_closed_form(make_state(2.0, 1.0, 0.0, 1.0));
    const double expected = 2.0 * std::sqrt(1.0 / 3.0) * std::sinh(0.5);
    CHECK(t.nu_alpha == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("bilinear route reproduces the closed forms") {
    std::mt19937 rng(10u);
    for (int k = 0; k < 1000; ++k) {
        const StateParams p = random_state(rng);
        const TildeFactors a = tilde_closed_form(p);
        const TildeFactors b = tilde_from_bilinears(p);
        CHECK(std::abs(a.n_t - b.n_t) <= 1e-12);
        CHECK(std::abs(a.nu_z - b.nu_z) <= 1e-12);
        CHECK(std::abs(a.nu_alpha - b.nu_alpha) <= 1e-12);
        CHECK(std::abs(b.nu_r) <= 1e-13);
    }
}

TEST_CASE("bilinear factors at the self-consistent epsilon=2 point") {
    const TildeFactors t = tilde_from_bilinears(self_consistent_state(2.0));
    CHECK(t.n_t == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(t.nu_z == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(std::abs(t.nu_alpha) <= 1e-13);
    CHECK(std::abs(t.nu_r) <= 1e-13);
}

TEST_CASE("nu_alpha vanishes exactly at theta = pi/2 and only there") {
    for (int k = 0; k <= 20; ++k) {
        const double theta = pi * k / 20.0;
        const TildeFactors t = tilde_closed_form(make_state(2.0, 1.0, theta, 1.0));
        if (std::abs(theta - pi / 2.0) < 1e-12)
            CHECK(std::abs(t.nu_alpha) <= 1e-14);
        else
            CHECK(std::abs(t.nu_alpha) > 1e-3 * std::abs(std::cos(theta)));
    }
}

TEST_CASE("n_tilde and nu_z depend on phi only through sin(phi)") {
    std::mt19937 rng(11u);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 100; ++k) {
        const double phi = pi * u(rng);  // pi - phi stays in [0, 2pi)
        const StateParams p1 = make_state(2.5, 1.3, 0.7, phi);
        const StateParams p2 = make_state(2.5, 1.3, 0.7, pi - phi);
        const TildeFactors a = tilde_closed_form(p1);
        const TildeFactors b = tilde_closed_form(p2);
        CHECK(std::abs(a.n_t - b.n_t) <= 1e-13);
        CHECK(std::abs(a.nu_z - b.nu_z) <= 1e-13);
    }
}

TEST_CASE("tilde factors do not involve ell_z") {
    const StateParams p1 = make_state(2.0, 1.0, 1.0, 1.0, 1.0);
    const StateParams p2 = make_state(2.0, 1.0, 1.0, 1.0, 137.0);
    const TildeFactors a = tilde_closed_form(p1);
    const TildeFactors b = tilde_closed_form(p2);
    CHECK(a.n_t == b.n_t);
    CHECK(a.nu_z == b.nu_z);
    CHECK(a.nu_alpha == b.nu_alpha);
}

TEST_CASE("normalization integral equals one") {
    const StateParams sc = self_consistent_state(2.0);
    CHECK(std::abs(normalization(sc, 25.0, 1e-10) - 1.0) <= 1e-8);

    const StateParams free_state = make_state(2.0, 1.0, pi / 2.0, 0.0);
    CHECK(std::abs(normalization(free_state, 25.0 / free_state.q_perp, 1e-10) - 1.0) <=
          1e-8);
}

TEST_CASE("normalization is independent of ell_z") {
    const StateParams a = make_state(2.0, 1.0, 1.0, 1.0, 1.0);
    const StateParams b = make_state(2.0, 1.0, 1.0, 1.0, 42.0);
    const double na = normalization(a, 25.0 / a.q_perp, 1e-11);
    const double nb = normalization(b, 25.0 / b.q_perp, 1e-11);
    CHECK(std::abs(na - nb) <= 1e-12);
}

TEST_CASE("normalization rejects a too-small tail cutoff") {
    const StateParams p = self_consistent_state(2.0);
    CHECK_THROWS_AS(normalization(p, 5.0, 1e-10), std::domain_error);
}

TEST_CASE("width diagnostics: analytic moments of the exponential density") {
    const StateParams p = self_consistent_state(2.0);  // q_perp = 1
    const WidthDiagnostics w = width_diagnostics(p);
    CHECK(w.mean_rho == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(w.rms_rho == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(w.efold == doctest::Approx(1.0).epsilon(1e-12));

    // q_perp = 2 halves all three
    const StateParams p2 = make_state(std::sqrt(2.0), 2.0 * std::asinh(2.0), 1.0, 1.0);
    CHECK(p2.q_perp == doctest::Approx(2.0).epsilon(1e-12));
    const WidthDiagnostics w2 = width_diagnostics(p2);
    CHECK(w2.mean_rho == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(w2.efold == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("width moments agree with quadrature of the radial density") {
    const StateParams p = make_state(3.0, 0.8, 1.0, 2.0);
    const double q = p.q_perp;
    const auto density = [q](double rho) { return 2.0 * q * std::exp(-2.0 * q * rho); };
    const double mean =
        integrate_adaptive([&](double r) { return r * density(r); }, 0.0, 40.0 / q, 1e-12)
            .value;
    const double second =
        integrate_adaptive([&](double r) { return r * r * density(r); }, 0.0, 40.0 / q,
                           1e-12)
            .value;
    const WidthDiagnostics w = width_diagnostics(p);
    CHECK(w.mean_rho == doctest::Approx(mean).epsilon(1e-9));
    CHECK(w.rms_rho == doctest::Approx(std::sqrt(second)).epsilon(1e-9));
}
