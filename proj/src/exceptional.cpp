#include "dynconf/exceptional.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>

#include "dynconf/error.hpp"

namespace dynconf {

const std::vector<ExceptionalJob>& exceptional_jobs() {
    static const std::vector<ExceptionalJob> jobs = {
        {"E6", {5, true}, 77, 11},
        {"E7", {8, false}, 346, 44},
        {"E8", {14, false}, 1892, 138},
        {"F4", {5, false}, 25, 5},
        {"G2", {2, false}, 4, 2},
    };
    return jobs;
}

const ExceptionalJob& exceptional_job(const std::string& kind) {
    for (const auto& j : exceptional_jobs())
        if (j.kind == kind) return j;
    fail(ErrorCode::InvalidArgument, "no exceptional job for '" + kind + "'");
}

namespace {

// Image of a configuration under the diagram twist, on a twisted quotient.
std::vector<int> twist_members(const TranslationQuiver& q, const std::vector<int>& members) {
    auto perm = diagram_twist(*q.diagram);
    std::vector<int> out;
    for (int c : members) {
        Slot s = q.vertices[c].slot();
        out.push_back(q.find({s.level, (*perm)[s.node]}));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ExceptionalResult run_exceptional(const std::string& kind, const RunOptions& options) {
    const ExceptionalJob& job = exceptional_job(kind);
    ExceptionalResult r;
    r.job = job;
    auto start = std::chrono::steady_clock::now();
    auto q = std::make_shared<TranslationQuiver>(build_quotient(build_dynkin(kind), job.group));
    r.quiver = q;
    r.vertices = q->size();
    if (options.dry_run) return r;

    EnumerateOptions eo;
    eo.workers = options.workers;
    eo.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(options.time_budget_seconds));
    try {
        QuiverHom hom = compute_quiver_hom(*q, options.workers);
        r.configurations = enumerate_configurations(*q, hom, eo);
        r.completed = true;
        r.total = r.configurations.size();
        r.mod_tau = count_mod_tau(*q, r.configurations);
        r.revalidated = true;
        for (const auto& c : r.configurations)
            if (!is_configuration(*q, hom, c.members).verdict) r.revalidated = false;
        if (job.group.twist) {
            std::set<std::vector<int>> all;
            for (const auto& c : r.configurations) all.insert(c.members);
            for (const auto& c : r.configurations)
                if (!all.count(twist_members(*q, c.members))) r.twist_stable = false;
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::TimeBudgetExceeded) throw;
        r.error = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

ExceptionalResult run_exceptional_checked(const std::string& kind, const RunOptions& options) {
    auto r = run_exceptional(kind, options);
    if (!r.completed) fail(ErrorCode::TimeBudgetExceeded, r.error);
    if (r.total != r.job.expected_total)
        fail(ErrorCode::CountMismatch, kind + ": found " + std::to_string(r.total) + " configurations, expected " +
                                           std::to_string(r.job.expected_total));
    if (r.mod_tau != r.job.expected_mod_tau)
        fail(ErrorCode::CountMismatch, kind + ": found " + std::to_string(r.mod_tau) + " tau-orbits, expected " +
                                           std::to_string(r.job.expected_mod_tau));
    return r;
}

bool CountTable::all_match() const {
    for (const auto& c : columns)
        if (!c.matches()) return false;
    return true;
}

std::string CountTable::render() const {
    std::ostringstream out;
    auto cell = [](const std::string& s) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%10s", s.c_str());
        return std::string(buf);
    };
    out << cell("") << "";
    for (const auto& c : columns) out << cell(c.job.kind + "/" + c.job.group.text());
    out << "\n" << cell("vertices");
    for (const auto& c : columns) out << cell(std::to_string(c.vertices));
    out << "\n" << cell("total");
    for (const auto& c : columns) out << cell(c.completed ? std::to_string(c.total) : "-");
    out << "\n" << cell("expected");
    for (const auto& c : columns) out << cell(std::to_string(c.job.expected_total));
    out << "\n" << cell("mod tau");
    for (const auto& c : columns) out << cell(c.completed ? std::to_string(c.mod_tau) : "-");
    out << "\n" << cell("expected");
    for (const auto& c : columns) out << cell(std::to_string(c.job.expected_mod_tau));
    out << "\n" << cell("seconds");
    for (const auto& c : columns) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", c.seconds);
        out << cell(c.completed ? buf : "-");
    }
    out << "\n";
    for (const auto& c : columns)
        if (!c.error.empty()) out << c.job.kind << ": " << c.error << "\n";
    return out.str();
}

CountTable run_all(const RunOptions& options, const std::vector<std::string>& only) {
    CountTable table;
    for (const auto& job : exceptional_jobs()) {
        if (!only.empty() && std::find(only.begin(), only.end(), job.kind) == only.end()) continue;
        table.columns.push_back(run_exceptional(job.kind, options));
    }
    return table;
}

}  // namespace dynconf
