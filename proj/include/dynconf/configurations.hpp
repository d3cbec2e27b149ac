#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dynconf/brauer.hpp"
#include "dynconf/hom_length.hpp"
#include "dynconf/labels.hpp"
#include "dynconf/quiver.hpp"

namespace dynconf {

struct Configuration {
    std::uint64_t quiver_id = 0;
    std::vector<int> members;  // sorted vertex ids

    bool operator==(const Configuration& o) const { return members == o.members; }
    bool operator<(const Configuration& o) const { return members < o.members; }
};

using LabelSet = std::set<VertexLabel>;

struct Violation {
    std::string condition;  // "unknown", "omega", "C2", "C1"
    std::vector<int> witnesses;
    std::string detail;
};

struct ConfigurationReport {
    bool verdict = true;
    std::vector<Violation> violations;
};

// Value of h(d, c) that a configuration demands for members c, d.
int required_h(int d, int c, int omega_c);

ConfigurationReport is_configuration(const TranslationQuiver& q, const std::vector<int>& members);
ConfigurationReport is_configuration(const TranslationQuiver& q, const QuiverHom& hom,
                                     const std::vector<int>& members);

struct EnumerateOptions {
    int workers = 1;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct EnumerateProgress {
    std::size_t branches_total = 0;
    std::size_t branches_done = 0;
    std::size_t found = 0;
};

// Complete list in canonical order. Throws TimeBudgetExceeded past the
// deadline; the message carries the progress reached.
std::vector<Configuration> enumerate_configurations(const TranslationQuiver& q,
                                                    const EnumerateOptions& options = {});
std::vector<Configuration> enumerate_configurations(const TranslationQuiver& q, const QuiverHom& hom,
                                                    const EnumerateOptions& options = {});

std::vector<int> tau_translate(const TranslationQuiver& q, const std::vector<int>& members);
std::size_t count_mod_tau(const TranslationQuiver& q, const std::vector<Configuration>& configs);

// Validates then attaches; InvalidConfiguration on failure.
TranslationQuiver attach_validated(const TranslationQuiver& q, const std::vector<int>& members);

// Labels and vertex sets on classical quotients.
LabelSet labels_of(const TranslationQuiver& q, const std::vector<int>& members);
std::vector<int> members_of(const TranslationQuiver& q, const LabelSet& labels);

BrauerRelation phi_A(const LabelSet& c, int n);
LabelSet psi_A(const BrauerRelation& b);
BrauerRelation phi_B(const LabelSet& c, int n);
LabelSet psi_B(const BrauerRelation& b);
BrauerRelation phi_C(const LabelSet& c, int n);
LabelSet psi_C(const BrauerRelation& b);

// Type D_{n+2}: class 1 holds no signed vertex or all four of one index,
// class 2 holds signed vertices of two different indices.
int d_class(const LabelSet& c, int n);
BrauerRelation phi1_D(const LabelSet& c, int n);
LabelSet psi1_D(const BrauerRelation& b);
BrauerRelation phi2_D(const LabelSet& c, int n);
std::pair<LabelSet, LabelSet> psi2_D(const BrauerRelation& b);
LabelSet involution_star(const LabelSet& c);

// Cover correspondence. A G-stable cover configuration is represented by the
// quotient set it descends to; lift returns its members inside a window.
std::vector<Slot> lift_configuration(const TranslationQuiver& window, const TranslationQuiver& quotient,
                                     const std::vector<int>& members);
std::vector<int> descend_configuration(const TranslationQuiver& window, const TranslationQuiver& quotient,
                                       const std::vector<Slot>& cover_members);

// Checks C ∩ H(c) = {c, ω c} for the lifted members of one period and (C1)
// on one fundamental domain, using h of the infinite cover.
ConfigurationReport check_on_cover(const TranslationQuiver& quotient, const std::vector<int>& members);

// Enumerates the classical quotient (A_{n+1}/tau^n, B/C_{n+1}/tau^2n,
// D_{n+2}/tau^2n), maps every configuration to its Brauer relation and back,
// and every relation of the matching family to configurations and back.
struct BijectionReport {
    bool ok = true;
    std::size_t configurations = 0;
    std::size_t relations = 0;
    std::vector<std::string> lines;
};
BijectionReport bijection_report(const DynkinDiagram& dg);

}  // namespace dynconf
