#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wsc {

struct SuiteOptions {
    std::uint64_t seed = 1;
    int jobs = 0;  // 0 = one worker per hardware thread
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Names of the verification sweeps, in report order. All are zero-failure
/// gates except bfs_domination, which is an experimental probe that records
/// its tally without asserting anything.
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});
std::vector<SuiteResult> run_all_suites(const SuiteOptions& opts = {});

std::string suites_report_json(const std::vector<SuiteResult>& results, const SuiteOptions& opts);

}  // namespace wsc
