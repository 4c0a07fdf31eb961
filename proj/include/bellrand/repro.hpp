#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bellrand {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ReproOptions {
    std::uint64_t seed = 42;
    int restarts = 50;
    double tol = 1e-6;
};

struct AcceptanceRun {
    std::vector<CheckResult> checks;  // criteria 1..12
    std::string artifacts;            // report + curve CSV payloads, deterministic
};

// Runs criteria 1..12 once.
AcceptanceRun run_acceptance_once(const ReproOptions& opts);

// Runs criteria 1..12 twice and appends criterion 13 (byte-identical outputs
// across the two runs).
std::vector<CheckResult> run_acceptance(const ReproOptions& opts);

// One "[PASS]/[FAIL] <id>. <name>: <detail>" line per criterion.
std::string format_report(const std::vector<CheckResult>& checks);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace bellrand
