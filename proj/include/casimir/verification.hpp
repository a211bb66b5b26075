#pragma once

#include <string>
#include <vector>

namespace casimir::cli {

struct VerifyOptions {
    double tol_override = 0.0;  // 0 keeps the per-check thresholds
    std::string only;           // run only checks whose name starts with this
    double quad_rel_tol = 1e-10;
};

struct CheckResult {
    std::string name;
    double max_rel_dev = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass = true;
};

/// Runs the brute-force cross-validation families: closed forms against
/// direct quadrature, the two thermal representations against each other and
/// against per-mode quadrature, thermodynamic identities, and the regulated
/// spectrum integral. Every check reports its worst relative deviation.
VerifyReport run_verification(const VerifyOptions& opt);

std::string verify_report_text(const VerifyReport& report);

} // namespace casimir::cli
