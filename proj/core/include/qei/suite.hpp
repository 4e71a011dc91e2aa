// suite.hpp — the full verification matrix the CLI and the acceptance
// runner execute: one criterion per entry, each with pinned tolerances
#pragma once

#include "qei/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qei {

struct SuiteConfig {
    std::uint64_t seed = 20240601;
    // Multiplies trial counts; 1.0 is the full gate, smaller is a smoke run.
    double scale = 1.0;
    // When positive, relaxes every gap gate to at least this value.
    double tol_override = -1.0;
    // Case-sensitive substring filter on criterion names; empty runs all.
    std::string only;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string details;
    double elapsed_seconds = 0.0;
};

struct SuiteResult {
    std::vector<CriterionResult> criteria;
    double total_seconds = 0.0;
    bool all_passed = true;
};

SuiteResult run_suite(const SuiteConfig& config);

Json suite_to_json(const SuiteResult& result, const SuiteConfig& config);

} // namespace qei
