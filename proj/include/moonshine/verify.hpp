#pragma once

#include <functional>
#include <string>
#include <vector>

#include "moonshine/fseries.hpp"

namespace moonshine {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
    std::string id;
    std::string anchor;  // the identity under test, written out as a formula
    CheckStatus status = CheckStatus::Fail;
    std::string first_mismatch;
};

struct VerifyReport {
    std::string suite;
    Frac truncation;
    double wall_seconds = 0.0;
    std::vector<CheckResult> checks;

    std::size_t failures() const;
    std::size_t skipped() const;
    bool all_passed() const { return failures() == 0; }
    std::string json() const;
    std::string text() const;
};

// Runs one of {eta, groups, jacobi, siegel, all}. T = 0 picks the suite
// default (eta 12, groups -, jacobi 8, siegel 3). Checks may run on up to
// `jobs` threads; report order and content are independent of `jobs`.
VerifyReport run_suite(const std::string& name, TruncOrder T = Frac(0), int jobs = 1);

}  // namespace moonshine
