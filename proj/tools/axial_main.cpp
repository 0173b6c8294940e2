// Command-line front end: verify, solve, profile, scan, residual.
// Exit codes: 0 success / all checks pass, 1 check or convergence failure,
// 2 usage or configuration error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "axial/consistency.hpp"
#include "axial/fields.hpp"
#include "axial/observables.hpp"
#include "axial/report.hpp"
#include "axial/residual.hpp"
#include "axial/state.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

axial::Couplings couplings_by_name(const std::string& name) {
    if (name == "physics") return axial::Couplings::physics();
    if (name == "test") return axial::Couplings::test();
    throw CLI::ValidationError("--couplings", "must be 'physics' or 'test'");
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

axial::StateParams state_from_flags(double epsilon, std::optional<double> beta,
                                    std::optional<double> theta,
                                    std::optional<double> phi) {
    if (!beta && !theta && !phi) return axial::self_consistent_state(epsilon);
    const axial::StateParams sc = axial::self_consistent_state(epsilon);
    return axial::make_state(epsilon, beta.value_or(sc.beta), theta.value_or(sc.theta),
                             phi.value_or(sc.phi));
}

int run_verify(const std::vector<double>& epsilons, const std::string& couplings,
               std::optional<double> tol, const std::string& out_path,
               const std::string& format) {
    if (format != "json") {
        std::cerr << "verify: --format must be json\n";
        return kExitUsage;
    }
    axial::SuiteConfig config;
    config.epsilons = epsilons;
    config.couplings = couplings_by_name(couplings);
    config.tol_override = tol;

    axial::VerificationReport rep;
    try {
        rep = axial::run_suite(config);
    } catch (const std::domain_error& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return kExitUsage;
    }

    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    os << axial::to_json(rep).dump(2) << "\n";
    return rep.all_pass() ? kExitOk : kExitCheckFailure;
}

int run_solve(double epsilon, const std::string& format) {
    if (!(epsilon > 1.0)) {
        std::cerr << "solve: --epsilon must exceed 1\n";
        return kExitUsage;
    }
    axial::ConsistencyReport cr;
    try {
        cr = axial::solve_consistency(epsilon);
    } catch (const std::runtime_error& e) {
        std::cerr << "solve: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    if (format == "json") {
        nlohmann::json j{{"epsilon", epsilon},
                         {"theta", cr.theta_star},
                         {"phi", cr.phi_star},
                         {"beta", cr.beta_star},
                         {"q_perp", cr.q_perp_star},
                         {"residual_norm", cr.residual_norm},
                         {"matched_closed_form", cr.matched_closed_form}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "theta,phi,beta,q_perp,residual_norm,matched_closed_form\n";
        std::cout << fmt(cr.theta_star) << "," << fmt(cr.phi_star) << ","
                  << fmt(cr.beta_star) << "," << fmt(cr.q_perp_star) << ","
                  << fmt(cr.residual_norm) << "," << (cr.matched_closed_form ? 1 : 0)
                  << "\n";
    }
    return kExitOk;
}

int run_profile(double epsilon, std::optional<double> beta, std::optional<double> theta,
                std::optional<double> phi, double rho_max, int points,
                const std::string& columns_flag, const std::string& out_path) {
    if (!(rho_max > 0.0) || points < 2) {
        std::cerr << "profile: need --rho-max > 0 and --points >= 2\n";
        return kExitUsage;
    }
    std::vector<std::string> columns;
    {
        std::stringstream ss(columns_flag);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item != "psi2" && item != "n" && item != "phi" && item != "az" &&
                item != "I") {
                std::cerr << "profile: unknown column '" << item << "'\n";
                return kExitUsage;
            }
            columns.push_back(item);
        }
        if (columns.empty()) {
            std::cerr << "profile: --columns must not be empty\n";
            return kExitUsage;
        }
    }

    axial::StateParams p;
    try {
        p = state_from_flags(epsilon, beta, theta, phi);
    } catch (const std::domain_error& e) {
        std::cerr << "profile: " << e.what() << "\n";
        return kExitUsage;
    }
    const axial::TildeFactors t = axial::tilde_closed_form(p);
    const axial::FieldPotentials pot =
        axial::make_potentials(p, axial::Couplings::test(), t);

    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    os << "rho";
    for (const auto& c : columns) os << "," << c;
    os << "\n";

    const double h = rho_max / points;  // rho = 0 stays off-grid
    for (int k = 1; k <= points; ++k) {
        const double rho = h * k;
        os << fmt(rho);
        for (const auto& c : columns) {
            double v = 0.0;
            if (c == "psi2") v = axial::radial_psi_sq(p, rho);
            else if (c == "n") v = t.n_t * axial::radial_psi_sq(p, rho);
            else if (c == "phi") v = pot.phi(rho);
            else if (c == "az") v = pot.a_z(rho);
            else v = axial::potential_integral_special(p.q_perp, rho);
            os << "," << fmt(v);
        }
        os << "\n";
    }
    return kExitOk;
}

int run_scan(double eps_min, double eps_max, int steps, const std::string& out_path) {
    if (!(eps_min > 1.0) || !(eps_max > eps_min) || steps < 2) {
        std::cerr << "scan: need 1 < --epsilon-min < --epsilon-max and --steps >= 2\n";
        return kExitUsage;
    }
    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    os << "epsilon,beta,q_z,q_perp,residual\n";
    for (int k = 0; k < steps; ++k) {
        const double e = eps_min + (eps_max - eps_min) * k / (steps - 1);
        axial::ConsistencyReport cr;
        try {
            cr = axial::solve_consistency(e);
        } catch (const std::runtime_error& ex) {
            std::cerr << "scan: " << ex.what() << "\n";
            return kExitCheckFailure;
        }
        const double q_z = std::sqrt(e * e - 1.0) * std::cosh(cr.beta_star / 2.0);
        os << fmt(e) << "," << fmt(cr.beta_star) << "," << fmt(q_z) << ","
           << fmt(cr.q_perp_star) << "," << fmt(cr.residual_norm) << "\n";
    }
    return kExitOk;
}

int run_residual(double epsilon, std::optional<double> beta, std::optional<double> theta,
                 std::optional<double> phi, const std::string& couplings,
                 const std::string& mode, const std::string& grid_flag,
                 const std::string& deriv, bool emit_profile) {
    axial::StateParams p;
    try {
        p = state_from_flags(epsilon, beta, theta, phi);
    } catch (const std::domain_error& e) {
        std::cerr << "residual: " << e.what() << "\n";
        return kExitUsage;
    }

    axial::GridSpec grid;
    grid.rho_max = 20.0 / p.q_perp;
    if (!grid_flag.empty()) {
        double gmin, gmax;
        int gpoints;
        char c1, c2;
        std::stringstream ss(grid_flag);
        if (!(ss >> gmin >> c1 >> gmax >> c2 >> gpoints) || c1 != ',' || c2 != ',') {
            std::cerr << "residual: --grid must be min,max,points\n";
            return kExitUsage;
        }
        grid.rho_min = gmin;
        grid.rho_max = gmax;
        grid.points = gpoints;
    }
    if (deriv == "analytic") grid.derivative_mode = axial::DerivativeMode::analytic;
    else if (deriv == "fd") grid.derivative_mode = axial::DerivativeMode::central_fd;
    else {
        std::cerr << "residual: --deriv must be analytic or fd\n";
        return kExitUsage;
    }
    if (mode != "free" && mode != "interacting") {
        std::cerr << "residual: --mode must be free or interacting\n";
        return kExitUsage;
    }

    axial::ResidualResult res;
    try {
        if (mode == "free") res = axial::free_dirac_residual(p, grid);
        else res = axial::interacting_dirac_residual(p, couplings_by_name(couplings), grid);
    } catch (const std::invalid_argument& e) {
        std::cerr << "residual: " << e.what() << "\n";
        return kExitUsage;
    }

    std::cout << fmt(res.rel_norm) << "\n";
    if (emit_profile) {
        std::cout << "rho,residual\n";
        for (std::size_t k = 0; k < res.profile.rho.size(); ++k)
            std::cout << fmt(res.profile.rho[k]) << "," << fmt(res.profile.values[k])
                      << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of the semi-localized axial electron state"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run the full verification suite");
    std::vector<double> v_eps{1.1, 2.0, 5.0, 10.0};
    std::string v_couplings = "test", v_out, v_format = "json";
    std::optional<double> v_tol;
    verify->add_option("--epsilon", v_eps, "energy list")->delimiter(',');
    verify->add_option("--couplings", v_couplings, "physics|test");
    verify->add_option("--tol", v_tol, "override every check tolerance");
    verify->add_option("--out", v_out, "output path (default stdout)");
    verify->add_option("--format", v_format, "json");

    // solve
    auto* solve = app.add_subcommand("solve", "solve the self-consistency conditions");
    double s_eps = 2.0;
    std::string s_format = "csv";
    solve->add_option("--epsilon", s_eps, "rescaled energy")->required();
    solve->add_option("--format", s_format, "csv|json");

    // profile
    auto* profile = app.add_subcommand("profile", "emit radial profiles as CSV");
    double p_eps = 2.0, p_rho_max = 10.0;
    int p_points = 100;
    std::optional<double> p_beta, p_theta, p_phi;
    std::string p_columns = "psi2,n,phi,az,I", p_out, p_format = "csv";
    profile->add_option("--epsilon", p_eps, "rescaled energy")->required();
    profile->add_option("--beta", p_beta, "localization parameter");
    profile->add_option("--theta", p_theta, "spinor polar angle");
    profile->add_option("--phi", p_phi, "spinor azimuth");
    profile->add_option("--rho-max", p_rho_max, "grid end");
    profile->add_option("--points", p_points, "grid points");
    profile->add_option("--columns", p_columns, "subset of psi2,n,phi,az,I");
    profile->add_option("--out", p_out, "output path (default stdout)");
    profile->add_option("--format", p_format, "csv");

    // scan
    auto* scan = app.add_subcommand("scan", "solve over an energy range");
    double sc_min = 1.1, sc_max = 10.0;
    int sc_steps = 10;
    std::string sc_out;
    scan->add_option("--epsilon-min", sc_min, "range start")->required();
    scan->add_option("--epsilon-max", sc_max, "range end")->required();
    scan->add_option("--steps", sc_steps, "number of energies")->required();
    scan->add_option("--out", sc_out, "output path (default stdout)");

    // residual
    auto* residual = app.add_subcommand("residual", "measure Dirac operator residuals");
    double r_eps = 2.0;
    std::optional<double> r_beta, r_theta, r_phi;
    std::string r_couplings = "test", r_mode = "free", r_grid, r_deriv = "analytic";
    bool r_profile = false;
    residual->add_option("--epsilon", r_eps, "rescaled energy")->required();
    residual->add_option("--beta", r_beta, "localization parameter");
    residual->add_option("--theta", r_theta, "spinor polar angle");
    residual->add_option("--phi", r_phi, "spinor azimuth");
    residual->add_option("--couplings", r_couplings, "physics|test");
    residual->add_option("--mode", r_mode, "free|interacting");
    residual->add_option("--grid", r_grid, "min,max,points");
    residual->add_option("--deriv", r_deriv, "analytic|fd");
    residual->add_flag("--profile", r_profile, "also print the per-rho profile");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed())
            return run_verify(v_eps, v_couplings, v_tol, v_out, v_format);
        if (solve->parsed()) return run_solve(s_eps, s_format);
        if (profile->parsed())
            return run_profile(p_eps, p_beta, p_theta, p_phi, p_rho_max, p_points,
                               p_columns, p_out);
        if (scan->parsed()) return run_scan(sc_min, sc_max, sc_steps, sc_out);
        if (residual->parsed())
            return run_residual(r_eps, r_beta, r_theta, r_phi, r_couplings, r_mode, r_grid,
                                r_deriv, r_profile);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
