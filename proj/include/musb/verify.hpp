#pragma once

#include <string>
#include <vector>

#include "musb/measures.hpp"

namespace musb {

struct CheckResult {
    std::string name;
    std::string status;  // "pass" | "fail" | "error"
    double metric = 0.0;
    double tolerance = 0.0;
};

struct VerificationReport {
    DeformationParams params{0.0, 1.0};
    std::vector<CheckResult> checks;
    std::string timestamp;
    std::string tool_version;

    bool all_pass() const;
};

inline constexpr const char* kToolVersion = "musb 1.0.0";

// Runs the full verification battery at the given parameters.
// tol_override > 0 replaces every check's default tolerance uniformly.
VerificationReport run_checks(const DeformationParams& params,
                              double tol_override = 0.0);

// One JSON document; identical inputs and tool version give identical bytes
// (the timestamp is read from the MUSB_TIMESTAMP environment variable when
// set, otherwise it is the current UTC time).
std::string report_to_json(const VerificationReport& report);

}  // namespace musb
