#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dynconf/configurations.hpp"
#include "dynconf/quiver.hpp"

namespace dynconf {

struct ExceptionalJob {
    std::string kind;  // E6, E7, E8, F4, G2
    GroupSpec group;
    std::size_t expected_total = 0;
    std::size_t expected_mod_tau = 0;
};

const std::vector<ExceptionalJob>& exceptional_jobs();
const ExceptionalJob& exceptional_job(const std::string& kind);

struct RunOptions {
    int workers = 1;
    double time_budget_seconds = 900.0;
    bool dry_run = false;
};

struct ExceptionalResult {
    ExceptionalJob job;
    int vertices = 0;
    bool completed = false;  // false on dry runs or an exhausted budget
    std::size_t total = 0;
    std::size_t mod_tau = 0;
    bool revalidated = false;
    bool twist_stable = true;  // E6: the set of configurations is preserved by the induced twist
    double seconds = 0.0;
    std::string error;  // progress report when the budget ran out
    std::vector<Configuration> configurations;
    std::shared_ptr<const TranslationQuiver> quiver;

    bool matches() const {
        return completed && total == job.expected_total && mod_tau == job.expected_mod_tau && revalidated &&
               twist_stable;
    }
};

// Builds, enumerates, counts and compares. A count mismatch is reported in
// the result; CountMismatch is thrown only by run_exceptional_checked.
ExceptionalResult run_exceptional(const std::string& kind, const RunOptions& options = {});
ExceptionalResult run_exceptional_checked(const std::string& kind, const RunOptions& options = {});

struct CountTable {
    std::vector<ExceptionalResult> columns;
    bool all_match() const;
    std::string render() const;  // two-row table plus timings
};

CountTable run_all(const RunOptions& options = {}, const std::vector<std::string>& only = {});

}  // namespace dynconf
