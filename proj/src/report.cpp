#include "axial/report.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <numbers>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "axial/algebra.hpp"
#include "axial/consistency.hpp"
#include "axial/expint.hpp"
#include "axial/observables.hpp"

namespace axial {

bool VerificationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckRecord& c) { return c.pass; });
}

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

StateParams random_state(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double epsilon = 1.05 + 9.0 * u(rng);
    const double beta = 0.1 + 2.9 * u(rng);
    const double theta = std::numbers::pi * u(rng);
    const double phi = 2.0 * std::numbers::pi * u(rng) * (1.0 - 1e-12);
    return make_state(epsilon, beta, theta, phi);
}

double pauli_identity_residual() {
    const Complex i{0.0, 1.0};
    const Axis axes[] = {Axis::x, Axis::y, Axis::z};
    double worst = 0.0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            Mat2 expected;
            if (a == b) expected = Mat2::identity();
            // epsilon_abc sigma_c
            const int c = 3 - a - b;
            if (a != b) {
                const double sign = ((b - a + 3) % 3 == 1) ? 1.0 : -1.0;
                expected = (i * Complex{sign, 0.0}) * pauli(axes[c]);
            }
            const Mat2 diff = pauli(axes[a]) * pauli(axes[b]) - expected;
            for (const auto& e : diff.e) worst = std::max(worst, std::abs(e));
        }
    return worst;
}

double gamma_identity_residual() {
    const GammaIndex idx[] = {GammaIndex::zero, GammaIndex::x, GammaIndex::y, GammaIndex::z};
    const double metric[] = {1.0, -1.0, -1.0, -1.0};
    double worst = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            const Mat4 anti = gamma(idx[mu]) * gamma(idx[nu]) + gamma(idx[nu]) * gamma(idx[mu]);
            Mat4 expected;
            if (mu == nu) expected = Complex{2.0 * metric[mu], 0.0} * Mat4::identity();
            const Mat4 diff = anti - expected;
            for (const auto& e : diff.e) worst = std::max(worst, std::abs(e));
        }
    return worst;
}

}  // namespace

VerificationReport run_suite(const SuiteConfig& config) {
    if (config.epsilons.empty())
        throw std::domain_error("run_suite: epsilon list must not be empty");
    for (double e : config.epsilons)
        if (!(e > 1.0))
            throw std::domain_error("run_suite: every epsilon must exceed 1, got " +
                                    std::to_string(e));

    VerificationReport rep;
    rep.version = kArtifactVersion;
    rep.timestamp = utc_timestamp();
    rep.epsilons = config.epsilons;
    rep.couplings = config.couplings;

    auto add = [&](const std::string& id, const std::string& anchor, double value,
                   double tol) {
        if (config.tol_override) tol = *config.tol_override;
        rep.checks.push_back({id, anchor, value <= tol, value, tol});
    };

    // --- algebra identities ---
    add("pauli-products", "Pauli matrix product identities", pauli_identity_residual(),
        1e-15);
    add("gamma-anticommutation", "Dirac matrix anticommutation, metric (+,-,-,-)",
        gamma_identity_residual(), 1e-15);

    // --- dispersion ---
    {
        std::mt19937 rng(20231u);
        double worst = 0.0;
        for (int k = 0; k < 200; ++k) {
            const StateParams p = random_state(rng);
            worst = std::max(worst, std::abs(p.q_z * p.q_z - p.q_perp * p.q_perp -
                                             (p.epsilon * p.epsilon - 1.0)));
        }
        add("dispersion", "dispersion relation with imaginary transverse momentum", worst,
            1e-12);
    }

    // --- bilinears versus closed forms ---
    {
        std::mt19937 rng(4242u);
        double worst = 0.0, worst_r = 0.0;
        for (int k = 0; k < 1000; ++k) {
            const StateParams p = random_state(rng);
            const TildeFactors a = tilde_closed_form(p);
            const TildeFactors b = tilde_from_bilinears(p);
            worst = std::max({worst, std::abs(a.n_t - b.n_t), std::abs(a.nu_z - b.nu_z),
                              std::abs(a.nu_alpha - b.nu_alpha)});
            worst_r = std::max(worst_r, std::abs(b.nu_r));
        }
        add("bilinear-closed-form", "density and flux bilinears versus closed forms", worst,
            1e-12);
        add("nu-r-zero", "vanishing radial flux", worst_r, 1e-13);
    }

    // --- normalization ---
    {
        double worst = 0.0;
        for (double e : config.epsilons) {
            const StateParams sc = self_consistent_state(e);
            worst = std::max(worst, std::abs(normalization(sc, 25.0 / sc.q_perp, 1e-10) - 1.0));
            const StateParams free_state =
                make_state(e, 1.0, std::numbers::pi / 2.0, 0.0);
            worst = std::max(
                worst, std::abs(normalization(free_state, 25.0 / free_state.q_perp, 1e-10) - 1.0));
        }
        add("normalization", "one-particle normalization integral", worst, 1e-8);
    }

    // --- potential integral cross-check ---
    {
        double worst = 0.0;
        for (double q : {0.5, 1.0, 2.0}) {
            for (int k = 0; k < 40; ++k) {
                const double rho = 1e-3 * std::pow(50.0 / 1e-3, k / 39.0);
                worst = std::max(worst, std::abs(potential_integral_quadrature(q, rho, 1e-12) -
                                                 potential_integral_special(q, rho)));
            }
        }
        add("potential-crosscheck", "radial potential integral, quadrature versus closed form",
            worst, 1e-10);
        add("potential-reference", "frozen reference value of the potential integral",
            std::abs(potential_integral_special(1.0, 1.0) - 1.3192634), 1e-7);
    }

    // --- source ODE residual convergence ---
    {
        const StateParams p = self_consistent_state(2.0);
        const TildeFactors t = tilde_closed_form(p);
        auto max_res = [&](int points) {
            std::vector<double> grid(points);
            const double h = (5.0 - 0.5) / (points - 1);
            for (int k = 0; k < points; ++k) grid[k] = 0.5 + h * k;
            const auto [rphi, raz] = ode_residual(p, config.couplings, t, grid);
            double worst = 0.0;
            for (double v : rphi.values) worst = std::max(worst, std::abs(v));
            for (double v : raz.values) worst = std::max(worst, std::abs(v));
            return worst;
        };
        const double ratio = max_res(201) / max_res(401);
        add("ode-residual-convergence", "order-2 convergence of the potential ODE residual",
            std::abs(ratio - 4.0), 0.5);
    }

    // --- consistency conditions and the closed-form solution ---
    {
        double worst13 = 0.0, worst14 = 0.0, worst9 = 0.0;
        double worst_match = 0.0, worst_q = 0.0;
        for (double e : config.epsilons) {
            const ConsistencyReport cr = solve_consistency(e);
            worst9 = std::max(worst9, std::abs(cr.condition_residuals.r9));
            worst13 = std::max({worst13, std::abs(cr.condition_residuals.r13a),
                                std::abs(cr.condition_residuals.r13b)});
            worst14 = std::max({worst14, cr.condition_residuals.r14a,
                                cr.condition_residuals.r14b});
            worst_match = std::max(
                {worst_match, std::abs(cr.theta_star - std::numbers::pi / 2.0),
                 std::abs(cr.phi_star - 3.0 * std::numbers::pi / 2.0),
                 std::abs(std::tanh(cr.beta_star / 2.0) - 1.0 / e)});
            worst_q = std::max(worst_q, std::abs(cr.q_perp_star - 1.0));
        }
        add("eq9-residual", "vanishing azimuthal flux condition", worst9, 1e-10);
        add("eq13a-residual", "linear consistency condition", worst13, 1e-9);
        add("eq14-residual", "spinor null-space condition", worst14, 1e-9);
        add("solver-eq15", "closed-form self-consistent parameters", worst_match, 1e-9);
        add("qperp-claim", "transverse width equals the Compton wavelength", worst_q, 1e-9);
    }

    // --- Dirac residuals ---
    {
        GridSpec grid = config.grid;
        grid.derivative_mode = DerivativeMode::analytic;
        std::mt19937 rng(777u);
        double worst_free = 0.0;
        for (int k = 0; k < 20; ++k) {
            const StateParams p = random_state(rng);
            GridSpec g = grid;
            g.rho_max = 20.0 / p.q_perp;
            worst_free = std::max(worst_free, free_dirac_residual(p, g).rel_norm);
        }
        add("free-dirac-residual", "free Dirac operator applied to the ansatz", worst_free,
            1e-12);

        double worst_int = 0.0;
        for (double e : config.epsilons) {
            const StateParams p = self_consistent_state(e);
            GridSpec g = grid;
            g.rho_max = 20.0 / p.q_perp;
            worst_int =
                std::max(worst_int, interacting_dirac_residual(p, config.couplings, g).rel_norm);
        }
        add("interacting-dirac-residual",
            "interacting Dirac operator at the self-consistent point", worst_int, 1e-12);

        // order-2 convergence of the finite-difference radial derivative
        const StateParams p = self_consistent_state(2.0);
        GridSpec g1 = grid;
        g1.derivative_mode = DerivativeMode::central_fd;
        g1.rho_min = 0.5;  // stay clear of the 1/sqrt(rho) axis region, see tests
        g1.points = 1024;
        GridSpec g2 = g1;
        g2.points = 2047;  // halves h on the same interval
        const double ratio =
            free_dirac_residual(p, g1).rel_norm / free_dirac_residual(p, g2).rel_norm;
        add("fd-convergence", "order-2 convergence of the finite-difference residual",
            std::abs(ratio - 4.0), 0.5);
    }

    return rep;
}

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckRecord& c : report.checks) {
        checks.push_back({{"id", c.id},
                          {"anchor", c.anchor},
                          {"status", c.pass ? "pass" : "fail"},
                          {"value", c.value},
                          {"tolerance", c.tolerance}});
    }
    return {{"version", report.version},
            {"timestamp", report.timestamp},
            {"parameters", {{"epsilons", report.epsilons}}},
            {"couplings",
             {{"alpha_f", report.couplings.alpha_f}, {"ell_z", report.couplings.ell_z}}},
            {"checks", checks}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
    std::string err;
    if (!validate_report_json(j, &err))
        throw std::invalid_argument("report_from_json: " + err);

    VerificationReport rep;
    rep.version = j.at("version").get<std::string>();
    rep.timestamp = j.at("timestamp").get<std::string>();
    rep.epsilons = j.at("parameters").at("epsilons").get<std::vector<double>>();
    rep.couplings.alpha_f = j.at("couplings").at("alpha_f").get<double>();
    rep.couplings.ell_z = j.at("couplings").at("ell_z").get<double>();
    for (const auto& c : j.at("checks")) {
        rep.checks.push_back({c.at("id").get<std::string>(), c.at("anchor").get<std::string>(),
                              c.at("status").get<std::string>() == "pass",
                              c.at("value").get<double>(), c.at("tolerance").get<double>()});
    }
    return rep;
}

bool validate_report_json(const nlohmann::json& j, std::string* error) {
    auto fail = [&](const std::string& msg) {
        if (error) *error = msg;
        return false;
    };
    if (!j.is_object()) return fail("report must be a JSON object");
    for (const char* key : {"version", "timestamp", "parameters", "couplings", "checks"})
        if (!j.contains(key)) return fail(std::string("missing field: ") + key);
    if (!j["version"].is_string() || !j["timestamp"].is_string())
        return fail("version and timestamp must be strings");
    if (!j["parameters"].is_object() || !j["parameters"].contains("epsilons") ||
        !j["parameters"]["epsilons"].is_array())
        return fail("parameters.epsilons must be an array");
    if (!j["couplings"].is_object() || !j["couplings"].contains("alpha_f") ||
        !j["couplings"].contains("ell_z"))
        return fail("couplings must contain alpha_f and ell_z");
    if (!j["checks"].is_array()) return fail("checks must be an array");
    for (const auto& c : j["checks"]) {
        if (!c.is_object()) return fail("each check must be an object");
        for (const char* key : {"id", "anchor", "status", "value", "tolerance"})
            if (!c.contains(key)) return fail(std::string("check missing field: ") + key);
        const std::string status = c["status"].get<std::string>();
        if (status != "pass" && status != "fail")
            return fail("check status must be 'pass' or 'fail'");
    }
    if (error) error->clear();
    return true;
}

}  // namespace axial
