#pragma once

#include <string>
#include <vector>

// Named verification checks, one per acceptance-level property of the
// library (closed-form reproduction, oracle equivalence, exact polynomial
// identities, ...). Shared by the `validate` CLI scenario and the
// acceptance suite. Every tolerance is pinned here.

namespace airyevolve::checks {

struct SubCheck {
    std::string name;
    double value;
    double tolerance;
    bool pass;
};

struct CheckResult {
    std::string name;
    std::string description;
    std::vector<SubCheck> subchecks;
    bool pass = true;
    double seconds = 0.0;

    // worst value/tolerance ratio across subchecks (<= 1 iff pass,
    // 0 for exact checks that hold identically)
    double worst_ratio() const;
};

const std::vector<std::string>& check_names();
bool is_check_name(const std::string& name);
CheckResult run_check(const std::string& name);
std::vector<CheckResult> run_all_checks();

} // namespace airyevolve::checks
