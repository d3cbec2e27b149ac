#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dynconf/dynkin.hpp"

namespace dynconf {

// A vertex of the infinite quiver Z(diagram): level x and diagram vertex i,
// with x congruent to parity(i) mod 2. Column = floor(x / 2).
struct Slot {
    std::int64_t level = 0;
    int node = 0;
    auto operator<=>(const Slot&) const = default;
};

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t floor_mod(std::int64_t a, std::int64_t b);

inline std::int64_t column_of(const Slot& s) { return floor_div(s.level, 2); }
Slot slot_at(const DynkinDiagram& dg, std::int64_t column, int node);
inline Slot tau_slot(const Slot& s, std::int64_t k = 1) { return {s.level - 2 * k, s.node}; }

// Cyclic group generated by tau^shift, optionally composed with the diagram twist.
struct GroupSpec {
    int shift = 1;
    bool twist = false;

    std::string text() const;                  // "tau5rho"
    static GroupSpec parse(const std::string&);  // accepts "tau5", "tau5rho", "5", "5rho"
    bool operator==(const GroupSpec&) const = default;
};

// g^power applied to a slot, where g acts by (x, i) -> (x - 2*shift, rho(i)).
Slot apply_group(const DynkinDiagram& dg, const GroupSpec& g, const Slot& s, std::int64_t power);

// Orbit representative with level in [0, 2*shift).
Slot reduce_slot(const DynkinDiagram& dg, const GroupSpec& g, const Slot& s);

struct QuiverVertex {
    int id = 0;
    std::int64_t level = 0;
    int node = -1;       // -1 for an attached projective-injective vertex
    int attached = -1;   // configuration member a p_c vertex hangs off
    std::int64_t column() const { return floor_div(level, 2); }
    Slot slot() const { return {level, node}; }
};

struct Arrow {
    int src = 0;
    int dst = 0;
    int d = 1;
    int dp = 1;
};

class TranslationQuiver {
public:
    std::uint64_t id = 0;
    std::string kind;  // diagram name, e.g. "E6"; empty for imported quivers
    std::optional<DynkinDiagram> diagram;
    std::optional<GroupSpec> group;
    std::optional<std::pair<std::int64_t, int>> window;  // (first column, columns)

    std::vector<QuiverVertex> vertices;
    std::vector<Arrow> arrows;
    std::vector<std::vector<int>> in_arrows;   // arrow indices per vertex
    std::vector<std::vector<int>> out_arrows;
    std::vector<int> tau;      // -1 where undefined
    std::vector<int> tau_inv;  // -1 where undefined
    std::vector<bool> projective;
    std::vector<bool> injective;
    std::optional<std::vector<int>> symmetrizer;

    int size() const { return static_cast<int>(vertices.size()); }
    bool is_stable() const;
    bool is_quotient() const { return group.has_value() && diagram.has_value(); }

    // Vertex carrying the slot, or -1. On quotients the slot is reduced first.
    int find(const Slot& s) const;

    // Rebuilds adjacency lists and the slot index from vertices/arrows/tau.
    void finalize();

private:
    std::map<Slot, int> index_;
};

std::uint64_t next_quiver_id();

TranslationQuiver build_z_window(const DynkinDiagram& dg, std::int64_t first_column,
                                 int num_columns);

struct AdmissibilityReport {
    bool admissible = true;
    std::int64_t witness_power = 0;  // g^power that fails
    std::optional<Slot> witness;     // x with gx == x or shared successors
    std::string reason;
};

// Throws IllegalGroup for shift < 1 or an unsupported twist.
AdmissibilityReport check_weakly_admissible(const DynkinDiagram& dg, const GroupSpec& g);

TranslationQuiver build_quotient(const DynkinDiagram& dg, const GroupSpec& g);

// Adds p_c with arrows c -> p_c -> tau^-1(c) for every member. Membership is
// not validated here beyond id checks; see attach_validated.
TranslationQuiver attach_configuration(const TranslationQuiver& q, const std::vector<int>& members);

// Symmetrizer a with a_x d_xy = d'_xy a_y along arrows, found by traversal.
std::optional<std::vector<int>> compute_symmetrizer(const TranslationQuiver& q);

// First violation of d'_(tau z) y = d_yz, or nullopt.
std::optional<std::string> check_translation_identity(const TranslationQuiver& q);

}  // namespace dynconf
