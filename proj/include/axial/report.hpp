#ifndef AXIAL_REPORT_HPP
#define AXIAL_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "axial/fields.hpp"
#include "axial/residual.hpp"

#include <nlohmann/json_fwd.hpp>

namespace axial {

inline constexpr const char* kArtifactVersion = "0.1.0";

struct CheckRecord {
    std::string id;      // stable identifier, e.g. "eq13a-residual"
    std::string anchor;  // source anchor for the checked relation
    bool pass;
    double value;      // measured quantity (usually a max residual)
    double tolerance;  // threshold the value is held against
};

struct VerificationReport {
    std::string version;
    std::string timestamp;  // ISO 8601 UTC
    std::vector<double> epsilons;
    Couplings couplings{1.0, 1.0};
    std::vector<CheckRecord> checks;

    bool all_pass() const;
};

struct SuiteConfig {
    std::vector<double> epsilons{1.1, 2.0, 5.0, 10.0};
    Couplings couplings = Couplings::test();
    GridSpec grid{};
    // When set, replaces every check's default tolerance.
    std::optional<double> tol_override;
};

// Runs the full verification suite: algebra identities, dispersion,
// bilinear/closed-form equivalence, normalization, potential cross-checks,
// ODE residual convergence, consistency condition residuals, solver versus
// the closed-form solution, the q_perp = 1 claim, and the free and
// interacting Dirac residuals.  Configuration errors throw; check failures
// are recorded in the report.
VerificationReport run_suite(const SuiteConfig& config);

nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

// Structural validation against the shipped report schema.
bool validate_report_json(const nlohmann::json& j, std::string* error = nullptr);

}  // namespace axial

#endif
