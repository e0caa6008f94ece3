#pragma once

// The acceptance battery: one entry per criterion, run by `cfs suite paper`
// and by the acceptance test binary.

#include <string>
#include <vector>

namespace cfs {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct SuiteOptions {
    bool parallel = true;  // use the OpenMP sweeps
};

// Criteria 1..10 in order.
std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& options = {});
CriterionResult run_criterion(int id, const SuiteOptions& options = {});

// `criterion N PASS|FAIL name: detail`
std::string format_criterion(const CriterionResult& r, bool with_time);

}  // namespace cfs
