#pragma once

// The acceptance battery: eleven numbered criteria, each a group of exact or
// numerical checks with a tolerance and a wall-clock limit.

#include <string>
#include <vector>

#include "mplkz/report.hpp"
#include "mplkz/series.hpp"

namespace mplkz {

struct SuiteOptions {
    /// Caps the weight/order parameter of every criterion; 0 keeps the defaults.
    int max_weight = 0;
    /// Criteria evaluated concurrently.
    int jobs = 1;
    EvalParams eval{};
    /// Criterion numbers to run; empty runs all.
    std::vector<int> only;
};

struct CriterionResult {
    int number = 0;
    std::string title;
    bool passed = false;
    double seconds = 0.0;
    double time_limit = 0.0;
    long checks = 0;
    long failures = 0;
    std::string detail;
    /// Failing numerical checks, plus informational ones that do not count.
    std::vector<VerificationReport> reports;

    bool within_time() const { return seconds <= time_limit; }
    bool ok() const { return passed && within_time(); }
};

constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int number, const SuiteOptions& options = {});
/// Runs the selected criteria on options.jobs threads; results come back in
/// criterion order.
std::vector<CriterionResult> run_suite(const SuiteOptions& options = {});

/// "[PASS] 3  title  (12 checks, 0.41 s / 60 s)  detail"
std::string to_text(const CriterionResult& r);
std::string suite_to_json(const std::vector<CriterionResult>& rs, int indent = 2);
/// Every carried report, one CSV row each.
std::string suite_to_csv(const std::vector<CriterionResult>& rs);

}  // namespace mplkz
