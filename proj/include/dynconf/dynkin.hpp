#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dynconf {

enum class DynkinKind { A, B, C, D, E, F, G };

char kind_letter(DynkinKind kind);
DynkinKind parse_kind(const std::string& text);

// Split "E6" / "d4" into kind and rank.
std::pair<DynkinKind, int> parse_type_name(const std::string& text);

struct DynkinEdge {
    int i;
    int j;
    int d;   // valuation read from i towards j
    int dp;  // valuation read from j towards i
};

struct Valuation {
    int d = 0;
    int dp = 0;
    bool operator==(const Valuation&) const = default;
};

struct DynkinDiagram {
    DynkinKind kind{};
    int rank = 0;
    std::vector<DynkinEdge> edges;

    // neighbours[u] = list of (v, valuation of u--v read from u).
    std::vector<std::vector<std::pair<int, Valuation>>> neighbours;
    // Bipartition colour, equal to graph distance from vertex 0 mod 2.
    std::vector<int> parity;

    std::string name() const;
    Valuation valuation(int u, int v) const;
    bool is_classical() const;
};

DynkinDiagram build_dynkin(DynkinKind kind, int rank);
DynkinDiagram build_dynkin(const std::string& type_name);

// Diagram automorphism used by twisted groups; nullopt when the type has
// no supported twist.
std::optional<std::vector<int>> diagram_twist(const DynkinDiagram& diagram);

}  // namespace dynconf
