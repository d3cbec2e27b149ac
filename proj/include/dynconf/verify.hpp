#pragma once

#include <set>
#include <string>
#include <vector>

namespace dynconf {

struct VerifyRow {
    enum class Status { Pass, Fail, Skipped, Note };
    std::string name;
    std::string expected;
    std::string actual;
    Status status = Status::Pass;
};

struct VerifyOptions {
    std::set<std::string> skip;  // row groups or exceptional kinds, e.g. "E8"
    bool inject_fault = false;   // negative control: corrupts the G2 valuation
    int workers = 1;
    double time_budget_seconds = 900.0;
};

std::vector<VerifyRow> verify_published_numbers(const VerifyOptions& options = {});
std::string render_verify_matrix(const std::vector<VerifyRow>& rows);
bool verify_all_pass(const std::vector<VerifyRow>& rows);

}  // namespace dynconf
